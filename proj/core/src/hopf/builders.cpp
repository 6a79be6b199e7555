#include "kup/hopf/builders.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "kup/error.hpp"

namespace kup {

// ------------------------------------------------------------------ groups

int GroupTable::identity() const {
    for (int e = 0; e < order(); ++e) {
        bool ok = true;
        for (int g = 0; g < order() && ok; ++g) ok = mul[e][g] == g && mul[g][e] == g;
        if (ok) return e;
    }
    fail(Errc::NotAGroup, "'" + name + "' has no identity element");
}

int GroupTable::inverse(int g) const {
    const int e = identity();
    for (int h = 0; h < order(); ++h)
        if (mul[g][h] == e && mul[h][g] == e) return h;
    fail(Errc::NotAGroup, "'" + labels[g] + "' has no inverse in '" + name + "'");
}

void GroupTable::validate() const {
    const int n = order();
    if (n < 1) fail(Errc::NotAGroup, "empty group table");
    if (static_cast<int>(mul.size()) != n) fail(Errc::NotAGroup, "table of '" + name + "' is not square");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) fail(Errc::NotAGroup, "table of '" + name + "' is not square");
        for (int v : row)
            if (v < 0 || v >= n) fail(Errc::NotAGroup, "table of '" + name + "' is not closed");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    fail(Errc::NotAGroup, "table of '" + name + "' is not associative at (" + labels[a] + ", " +
                                              labels[b] + ", " + labels[c] + ")");
    (void)identity();
    for (int g = 0; g < n; ++g) (void)inverse(g);
}

int GroupTable::count_roots(int n) const {
    const int e = identity();
    int count = 0;
    for (int x = 0; x < order(); ++x) {
        int base = n >= 0 ? x : inverse(x);
        int p = e;
        for (int k = 0; k < std::abs(n); ++k) p = mul[p][base];
        if (p == e) ++count;
    }
    return count;
}

GroupTable GroupTable::parse(std::string_view text) {
    GroupTable g;
    g.name = "table";
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "name") {
            if (tok.size() != 2) fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": expected 'name <id>'");
            g.name = tok[1];
        } else if (tok[0] == "elements") {
            g.labels.assign(tok.begin() + 1, tok.end());
        } else {
            if (g.labels.empty())
                fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": table row before 'elements'");
            rows.push_back(tok);
        }
    }
    const int n = g.order();
    if (static_cast<int>(rows.size()) != n) fail(Errc::NotAGroup, "group table needs one row per element");
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) fail(Errc::NotAGroup, "group table row has wrong length");
        for (int j = 0; j < n; ++j) {
            auto it = std::find(g.labels.begin(), g.labels.end(), rows[i][j]);
            if (it == g.labels.end()) fail(Errc::NotAGroup, "unknown element '" + rows[i][j] + "' in table");
            g.mul[i][j] = static_cast<int>(it - g.labels.begin());
        }
    }
    g.validate();
    return g;
}

namespace {

std::string power_label(const std::string& gen, int k) {
    if (k == 0) return "1";
    if (k == 1) return gen;
    return gen + "^" + std::to_string(k);
}

/// Builds a table from elements given as abstract words with an explicit product.
template <typename Elem, typename Mul, typename Label>
GroupTable table_from(const std::string& name, const std::vector<Elem>& elems, Mul&& mul, Label&& label) {
    GroupTable g;
    g.name = name;
    for (const auto& e : elems) g.labels.push_back(label(e));
    const int n = static_cast<int>(elems.size());
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem p = mul(elems[i], elems[j]);
            // Equivalence via ordering: GCC 11 misreports the inlined std::array operator==.
            auto it = std::find_if(elems.begin(), elems.end(), [&](const Elem& e) { return !(e < p) && !(p < e); });
            if (it == elems.end()) fail(Errc::NotAGroup, "generated table of '" + name + "' is not closed");
            g.mul[i][j] = static_cast<int>(it - elems.begin());
        }
    g.validate();
    return g;
}

}  // namespace

GroupTable cyclic_group(int n) {
    if (n < 1) fail(Errc::BadParameters, "cyclic group order must be positive");
    std::vector<int> elems(n);
    std::iota(elems.begin(), elems.end(), 0);
    return table_from(
        "Z" + std::to_string(n), elems, [n](int a, int b) { return (a + b) % n; },
        [](int a) { return power_label("g", a); });
}

GroupTable klein_four_group() {
    using E = std::array<int, 2>;
    std::vector<E> elems{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    return table_from(
        "Z2xZ2", elems, [](E a, E b) { return E{(a[0] + b[0]) % 2, (a[1] + b[1]) % 2}; },
        [](E a) {
            if (a[0] == 0 && a[1] == 0) return std::string("1");
            std::string s;
            if (a[0]) s += "a";
            if (a[1]) s += "b";
            return s;
        });
}

GroupTable symmetric_group_3() {
    using P = std::array<int, 3>;
    std::vector<P> elems{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    // (p q)(i) = p(q(i)): apply q first.
    return table_from(
        "S3", elems, [](P p, P q) { return P{p[q[0]], p[q[1]], p[q[2]]}; },
        [](P p) { return std::string("[") + char('1' + p[0]) + char('1' + p[1]) + char('1' + p[2]) + "]"; });
}

GroupTable quaternion_group() {
    // Elements (sign, unit) with unit in {1, i, j, k}.
    using Q = std::array<int, 2>;
    static const int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<Q> elems;
    for (int s : {1, -1})
        for (int u = 0; u < 4; ++u) elems.push_back({s, u});
    return table_from(
        "Q8", elems, [](Q a, Q b) { return Q{a[0] * b[0] * sign[a[1]][b[1]], table[a[1]][b[1]]}; },
        [](Q a) {
            static const char* names[4] = {"1", "i", "j", "k"};
            return std::string(a[0] < 0 ? "-" : "") + names[a[1]];
        });
}

GroupTable dihedral_group_8() {
    // r^a s^b with s r s = r^{-1}.
    using D = std::array<int, 2>;
    std::vector<D> elems;
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 4; ++a) elems.push_back({a, b});
    return table_from(
        "D8", elems,
        [](D x, D y) {
            int a = x[1] == 0 ? (x[0] + y[0]) % 4 : (x[0] - y[0] + 4) % 4;
            return D{a, (x[1] + y[1]) % 2};
        },
        [](D x) {
            std::string s = x[0] == 0 ? "" : power_label("r", x[0]);
            if (x[1]) s += "s";
            return s.empty() ? std::string("1") : s;
        });
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    GroupTable g;
    g.name = a.name + "x" + b.name;
    const int na = a.order(), nb = b.order();
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) g.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
    g.mul.assign(na * nb, std::vector<int>(na * nb));
    for (int i = 0; i < na * nb; ++i)
        for (int j = 0; j < na * nb; ++j)
            g.mul[i][j] = a.mul[i / nb][j / nb] * nb + b.mul[i % nb][j % nb];
    g.validate();
    return g;
}

// -------------------------------------------------------------- algebras

HopfData group_algebra(const GroupTable& g) {
    g.validate();
    const int n = g.order();
    BilinearTable m(n);
    CoproductTable d(n);
    LinearMap s(n);
    Covector eps(n, CycScalar(1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j).add(g.mul[i][j], CycScalar(1));
        d.at(i).push_back({i, i, CycScalar(1)});
        s.col(i).add(g.inverse(i), CycScalar(1));
    }
    return HopfData("k[" + g.name + "]", g.labels, std::move(m), SparseVector::basis(n, g.identity()), std::move(d),
                    std::move(eps), std::move(s));
}

HopfData taft(int n, const CycScalar& zeta) {
    if (n < 2) fail(Errc::BadParameters, "Taft algebra needs n >= 2");
    if (root_of_unity_order(zeta) != n) fail(Errc::NotPrimitive, zeta.str() + " is not a primitive root of order " + std::to_string(n));
    const int dim = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };
    std::vector<CycScalar> zpow(n);
    zpow[0] = CycScalar(1);
    for (int k = 1; k < n; ++k) zpow[k] = zpow[k - 1] * zeta;

    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string l;
            if (i > 0) l += power_label("x", i);
            if (j > 0) l += power_label("g", j);
            labels.push_back(l.empty() ? "1" : l);
        }

    // x^a g^b * x^c g^d = zeta^{bc} x^{a+c} g^{b+d}
    BilinearTable m(dim);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (a + c < n) m.at(idx(a, b), idx(c, d)).add(idx(a + c, (b + d) % n), zpow[(b * c) % n]);

    // Extend Delta multiplicatively from Delta(g), Delta(x).
    const std::vector<int> legs{dim, dim};
    auto simple = [&](int l, int r) {
        const int t[2] = {l, r};
        return SparseTensor::basis(legs, t);
    };
    SparseTensor dg = simple(idx(0, 1), idx(0, 1));
    SparseTensor dx = simple(idx(1, 0), idx(0, 1)) + simple(idx(0, 0), idx(1, 0));
    CoproductTable delta(dim);
    std::vector<SparseTensor> dxi(n);
    dxi[0] = simple(idx(0, 0), idx(0, 0));
    for (int i = 1; i < n; ++i) dxi[i] = dxi[i - 1].mul(dx, m);
    for (int i = 0; i < n; ++i) {
        SparseTensor cur = dxi[i];
        for (int j = 0; j < n; ++j) {
            std::vector<int> k(2);
            for (const auto& [key, c] : cur.entries()) {
                cur.decode(key, k);
                delta.at(idx(i, j)).push_back({k[0], k[1], c});
            }
            cur = cur.mul(dg, m);
        }
    }

    Covector eps(dim);
    for (int j = 0; j < n; ++j) eps[idx(0, j)] = CycScalar(1);

    // S(x^i g^j) = S(g)^j S(x)^i with S(g) = g^{-1}, S(x) = -x g^{-1}.
    LinearMap s(dim);
    const SparseVector sg = SparseVector::basis(dim, idx(0, n - 1));
    const SparseVector sx = SparseVector::basis(dim, idx(1, n - 1), CycScalar(-1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseVector v = SparseVector::basis(dim, idx(0, 0));
            for (int k = 0; k < j; ++k) v = m.apply(v, sg);
            for (int k = 0; k < i; ++k) v = m.apply(v, sx);
            s.col(idx(i, j)) = v;
        }

    std::string name = "T(zeta_" + std::to_string(n) + ")";
    if (zeta != CycScalar::root_of_unity(n)) name = "T(" + zeta.str() + ")";
    return HopfData(name, labels, std::move(m), SparseVector::basis(dim, idx(0, 0)),
                    std::move(delta), std::move(eps), std::move(s));
}

HopfData taft(int n) { return taft(n, CycScalar::root_of_unity(n)); }

HopfData dual(const HopfData& h) {
    const int n = h.dim();
    BilinearTable m(n);
    for (int k = 0; k < n; ++k)
        for (const auto& t : h.comult().at(k)) m.at(t.left, t.right).add(k, t.coeff);
    CoproductTable d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : h.mult().at(i, j).entries()) d.at(k).push_back({i, j, c});
    SparseVector unit = SparseVector::from_dense(h.counit());
    Covector eps = h.unit().to_dense();
    std::vector<std::string> labels;
    for (const auto& l : h.labels()) labels.push_back("d<" + l + ">");
    return HopfData(h.name() + "*", labels, std::move(m), std::move(unit), std::move(d), std::move(eps),
                    h.antipode().transpose());
}

HopfData opposite(const HopfData& h) {
    const int n = h.dim();
    BilinearTable m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = h.mult().at(j, i);
    if (!h.antipode_invertible()) fail(Errc::AxiomFailure, "opposite of an algebra with singular antipode");
    return HopfData(h.name() + "^op", h.labels(), std::move(m), h.unit(), h.comult(), h.counit(), h.antipode_inv());
}

HopfData tensor_product(const HopfData& h, const HopfData& k) {
    const int a = h.dim(), b = k.dim(), n = a * b;
    auto idx = [b](int i, int j) { return i * b + j; };
    BilinearTable m(n);
    for (int i1 = 0; i1 < a; ++i1)
        for (int j1 = 0; j1 < b; ++j1)
            for (int i2 = 0; i2 < a; ++i2)
                for (int j2 = 0; j2 < b; ++j2)
                    for (const auto& [p, cp] : h.mult().at(i1, i2).entries())
                        for (const auto& [q, cq] : k.mult().at(j1, j2).entries())
                            m.at(idx(i1, j1), idx(i2, j2)).add(idx(p, q), cp * cq);
    CoproductTable d(n);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            for (const auto& s : h.comult().at(i))
                for (const auto& t : k.comult().at(j))
                    d.at(idx(i, j)).push_back({idx(s.left, t.left), idx(s.right, t.right), s.coeff * t.coeff});
    SparseVector unit(n);
    for (const auto& [p, cp] : h.unit().entries())
        for (const auto& [q, cq] : k.unit().entries()) unit.add(idx(p, q), cp * cq);
    Covector eps(n);
    LinearMap s(n);
    std::vector<std::string> labels;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            eps[idx(i, j)] = h.counit()[i] * k.counit()[j];
            for (const auto& [p, cp] : h.antipode().col(i).entries())
                for (const auto& [q, cq] : k.antipode().col(j).entries()) s.col(idx(i, j)).add(idx(p, q), cp * cq);
            labels.push_back("(" + h.labels()[i] + "," + k.labels()[j] + ")");
        }
    return HopfData(h.name() + "⊗" + k.name(), labels, std::move(m), std::move(unit), std::move(d), std::move(eps),
                    std::move(s));
}

}  // namespace kup
