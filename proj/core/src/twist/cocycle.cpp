#include "kup/twist/cocycle.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "kup/error.hpp"
#include "kup/hopf/tensor_ops.hpp"
#include "kup/tensor/linalg.hpp"

namespace kup {

struct TwoCocycle::Cache {
    std::recursive_mutex mu;
    std::map<int, SparseTensor> fn, fn_inv;
};

namespace {

SparseTensor one_tensor(const HopfData& h, int n) { return unit_tensor(h, n); }

/// Flattened index for coordinates in Z_{orders[0]} x ...
int flat_index(const std::vector<int>& orders, const std::vector<int>& a) {
    int f = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) f = f * orders[k] + ((a[k] % orders[k]) + orders[k]) % orders[k];
    return f;
}

std::vector<std::vector<int>> all_coords(const std::vector<int>& orders) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(orders.size(), 0);
    while (true) {
        out.push_back(a);
        int k = static_cast<int>(orders.size()) - 1;
        while (k >= 0 && ++a[k] == orders[k]) a[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

SparseVector power(const HopfData& h, const SparseVector& g, int e) {
    SparseVector r = h.one();
    for (int i = 0; i < e; ++i) r = h.mul(r, g);
    return r;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(' || ch == '<') ++depth;
        if (ch == ')' || ch == '>') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (...) {
        fail(Errc::BadParameters, "bad integer '" + s + "' in " + what);
    }
    if (pos != s.size()) fail(Errc::BadParameters, "bad integer '" + s + "' in " + what);
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// TwoCocycle accessors

const SparseTensor& TwoCocycle::F_n(int n) const {
    if (n < 0) fail(Errc::BadParameters, "F_n needs n >= 0");
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->fn.find(n); it != cache_->fn.end()) return it->second;
    const HopfData& h = *host_;
    SparseTensor t;
    if (n == 0) {
        t = SparseTensor::scalar(CycScalar(1));
    } else if (n == 1) {
        t = SparseTensor::from_vector(h.one());
    } else {
        // F_n = (1 (x) F_{n-1})(id (x) Delta^{n-1})(F)
        t = leg_product(h, F_n(n - 1).insert_leg(0, h.one()), expand(h, F_, 1, n - 1));
    }
    return cache_->fn.emplace(n, std::move(t)).first->second;
}

const SparseTensor& TwoCocycle::F_n_inv(int n) const {
    if (n < 0) fail(Errc::BadParameters, "F_n needs n >= 0");
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->fn_inv.find(n); it != cache_->fn_inv.end()) return it->second;
    const HopfData& h = *host_;
    SparseTensor t;
    if (n == 0) {
        t = SparseTensor::scalar(CycScalar(1));
    } else if (n == 1) {
        t = SparseTensor::from_vector(h.one());
    } else {
        // F_n^{-1} = (id (x) Delta^{n-1})(F^{-1})(1 (x) F_{n-1}^{-1})
        t = leg_product(h, expand(h, Finv_, 1, n - 1), F_n_inv(n - 1).insert_leg(0, h.one()));
    }
    return cache_->fn_inv.emplace(n, std::move(t)).first->second;
}

SparseVector TwoCocycle::Q_s(int s) const {
    const HopfData& h = *host_;
    SparseVector q = h.one();
    if (s >= 0) {
        for (int t = 0; t < s; ++t) q = h.mul(q, h.S(Q_, 2 * t));  // Q_{t+1} = Q_t S^{2t}(Q)
    } else {
        for (int t = -1; t >= s; --t) q = h.mul(q, h.S(Qinv_, 2 * t));  // Q_t = Q_{t+1} S^{2t}(Q^{-1})
    }
    return q;
}

SparseVector TwoCocycle::Q_s_inv(int s) const {
    const HopfData& h = *host_;
    SparseVector q = h.one();
    if (s >= 0) {
        for (int t = 0; t < s; ++t) q = h.mul(h.S(Qinv_, 2 * t), q);
    } else {
        for (int t = -1; t >= s; --t) q = h.mul(h.S(Q_, 2 * t), q);
    }
    return q;
}

bool TwoCocycle::is_trivial() const { return F_ == one_tensor(*host_, 2); }

// ---------------------------------------------------------------------------------------------
// Verification

std::optional<SparseTensor> tensor_inverse(const HopfData& h, const SparseTensor& t) {
    const int d = h.dim();
    const int N = d * d;
    if (t.arity() != 2) fail(Errc::ArityMismatch, "tensor_inverse expects a 2-leg tensor");
    Matrix a(N, N);
    for (int col = 0; col < N; ++col) {
        const int ij[2] = {col / d, col % d};
        SparseTensor prod = leg_product(h, t, SparseTensor::basis(h.legs(2), ij));
        std::vector<int> idx(2);
        for (const auto& [k, c] : prod.entries()) {
            prod.decode(k, idx);
            a(idx[0] * d + idx[1], col) = c;
        }
    }
    SparseTensor one = one_tensor(h, 2);
    std::vector<CycScalar> rhs(N);
    std::vector<int> idx(2);
    for (const auto& [k, c] : one.entries()) {
        one.decode(k, idx);
        rhs[idx[0] * d + idx[1]] = c;
    }
    auto x = a.solve(rhs);
    if (!x) return std::nullopt;
    TensorBuilder b(h.legs(2));
    for (int r = 0; r < N; ++r)
        if (!(*x)[r].is_zero()) {
            const int ij[2] = {r / d, r % d};
            b.add(ij, (*x)[r]);
        }
    SparseTensor inv = std::move(b).finalize();
    if (!(leg_product(h, inv, t) == one)) return std::nullopt;
    return inv;
}

TwoCocycle verify_cocycle(const HopfData& h, const SparseTensor& F, std::optional<SparseTensor> Finv) {
    if (F.arity() != 2 || F.dims() != h.legs(2)) fail(Errc::ArityMismatch, "a cocycle is a 2-leg tensor over H");
    const SparseTensor one2 = one_tensor(h, 2);

    // 1. invertibility
    if (Finv) {
        if (Finv->arity() != 2 || Finv->dims() != h.legs(2))
            fail(Errc::ArityMismatch, "the inverse of a cocycle is a 2-leg tensor over H");
        if (!(leg_product(h, F, *Finv) == one2) || !(leg_product(h, *Finv, F) == one2))
            fail(Errc::NotInverse, "supplied F^{-1} is not the inverse of F");
    } else {
        Finv = tensor_inverse(h, F);
        if (!Finv) fail(Errc::NotInverse, "F is not invertible in H (x) H");
    }

    // 2. normalization
    if (!(expand(h, F, 0, 0).to_vector() == h.one()) || !(expand(h, F, 1, 0).to_vector() == h.one()))
        fail(Errc::NotGaugeTransform, "(eps (x) id)F and (id (x) eps)F must both equal 1");

    // 3. cocycle identity
    SparseTensor lhs = F.insert_leg(0, h.one());
    lhs = leg_product(h, lhs, expand(h, F, 1, 2));
    lhs = leg_product(h, lhs, expand(h, *Finv, 0, 2));
    lhs = leg_product(h, lhs, Finv->insert_leg(2, h.one()));
    if (!(lhs == one_tensor(h, 3)))
        fail(Errc::CocycleIdentityFails, "(1(x)F)(id(x)Delta)(F)(Delta(x)id)(F^-1)(F^-1(x)1) != 1(x)1(x)1");

    TwoCocycle c;
    c.host_ = std::make_shared<const HopfData>(h);
    c.F_ = F;
    c.Finv_ = std::move(*Finv);
    c.u_ = h.multiply_all(c.F_.apply_on_leg(1, h.antipode()));
    c.uinv_ = h.multiply_all(c.Finv_.apply_on_leg(0, h.antipode()));
    if (!(h.mul(c.u_, c.uinv_) == h.one()) || !(h.mul(c.uinv_, c.u_) == h.one()))
        fail(Errc::CocycleIdentityFails, "u = f1 S(f2) is not inverted by S(d1) d2");
    c.Q_ = h.mul(c.u_, h.S(c.uinv_));
    c.Qinv_ = h.mul(h.S(c.u_), c.uinv_);
    c.cache_ = std::make_shared<TwoCocycle::Cache>();
    return c;
}

TwoCocycle trivial_cocycle(const HopfData& h) {
    SparseTensor one = one_tensor(h, 2);
    return verify_cocycle(h, one, one);
}

SparseTensor F_n_mirrored(const TwoCocycle& c, int n) {
    const HopfData& h = c.host();
    if (n <= 1) return c.F_n(n);
    // F_n = (F_{n-1} (x) 1)(Delta^{n-1} (x) id)(F)
    SparseTensor prev = F_n_mirrored(c, n - 1);
    return leg_product(h, prev.insert_leg(prev.arity(), h.one()), expand(h, c.F(), 0, n - 1));
}

HopfData drinfeld_twist(const HopfData& h, const TwoCocycle& c) {
    const int n = h.dim();
    CoproductTable delta(n);
    std::vector<int> idx(2);
    for (int i = 0; i < n; ++i) {
        SparseTensor t = leg_product(h, leg_product(h, c.F(), h.coproduct(h.basis(i))), c.F_inv());
        for (const auto& [k, v] : t.entries()) {
            t.decode(k, idx);
            delta.at(i).push_back({idx[0], idx[1], v});
        }
    }
    LinearMap s(n);
    for (int i = 0; i < n; ++i) s.col(i) = h.mul(h.mul(c.u(), h.antipode().col(i)), c.u_inv());
    HopfData out(h.name() + "_F", h.labels(), h.mult(), h.unit(), std::move(delta), h.counit(), std::move(s));
    AxiomReport rep = verify_axioms(out);
    for (const auto& chk : rep.checks)
        if (!chk.passed) fail(Errc::AxiomFailure, "twisted algebra fails '" + chk.name + "' at " + chk.witness);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Bicharacter cocycles

int grouplike_order(const HopfData& h, const SparseVector& g) {
    if (g.is_zero() || !h.eps(g).is_one()) return 0;
    if (!(h.coproduct(g) == SparseTensor::simple({g, g}))) return 0;
    SparseVector p = g;
    for (int k = 1; k <= h.dim(); ++k) {
        if (p == h.one()) return k;
        p = h.mul(p, g);
    }
    return 0;
}

IdempotentFamily character_idempotents(const HopfData& h, const std::vector<SparseVector>& grouplikes) {
    IdempotentFamily fam;
    for (const auto& g : grouplikes) {
        const int o = grouplike_order(h, g);
        if (o == 0) fail(Errc::BadParameters, "character idempotents need grouplike generators");
        fam.orders.push_back(o);
    }
    for (std::size_t i = 0; i < grouplikes.size(); ++i)
        for (std::size_t j = i + 1; j < grouplikes.size(); ++j)
            if (!(h.mul(grouplikes[i], grouplikes[j]) == h.mul(grouplikes[j], grouplikes[i])))
                fail(Errc::BadParameters, "character idempotents need commuting generators");
    // Per-factor idempotents e^{(k)}_a = (1/n) sum_i zeta_n^{-ia} g_k^i.
    std::vector<std::vector<SparseVector>> factor(grouplikes.size());
    for (std::size_t k = 0; k < grouplikes.size(); ++k) {
        const int n = fam.orders[k];
        std::vector<SparseVector> pw(n);
        for (int i = 0; i < n; ++i) pw[i] = power(h, grouplikes[k], i);
        for (int a = 0; a < n; ++a) {
            SparseVector e(h.dim());
            for (int i = 0; i < n; ++i) e += pw[i].scaled(CycScalar::root_of_unity(n, -static_cast<std::int64_t>(i) * a));
            factor[k].push_back(e.scaled(CycScalar(Rational(1, n))));
        }
    }
    fam.coords = all_coords(fam.orders);
    for (const auto& a : fam.coords) {
        SparseVector e = h.one();
        for (std::size_t k = 0; k < a.size(); ++k) e = h.mul(e, factor[k][a[k]]);
        fam.idempotents.push_back(e);
    }
    return fam;
}

IdempotentFamily delta_idempotents(const HopfData& h, const std::vector<std::string>& generator_labels) {
    const int n = h.dim();
    // Group law read off the coproduct: Delta(delta_z) = sum_{xy = z} delta_x (x) delta_y.
    std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
    std::vector<int> idx(2);
    for (int z = 0; z < n; ++z) {
        SparseTensor d = h.coproduct(h.basis(z));
        for (const auto& [k, c] : d.entries()) {
            d.decode(k, idx);
            if (!c.is_one() || mul[idx[0]][idx[1]] != -1)
                fail(Errc::BadParameters, "'" + h.name() + "' is not the dual of a group algebra in its delta basis");
            mul[idx[0]][idx[1]] = z;
        }
    }
    for (const auto& row : mul)
        for (int v : row)
            if (v < 0) fail(Errc::BadParameters, "'" + h.name() + "' is not the dual of a group algebra in its delta basis");
    int e = -1;
    for (int i = 0; i < n; ++i)
        if (h.counit()[i].is_one()) e = i;
    std::vector<int> gens;
    IdempotentFamily fam;
    for (const auto& l : generator_labels) {
        const int g = h.index_of(l);
        if (g < 0) fail(Errc::BadParameters, "unknown basis label '" + l + "'");
        int o = 1;
        for (int p = g; p != e; p = mul[p][g]) {
            if (++o > n) fail(Errc::BadParameters, "generator '" + l + "' has no finite order");
        }
        gens.push_back(g);
        fam.orders.push_back(o);
    }
    fam.coords = all_coords(fam.orders);
    std::vector<int> used(n, 0);
    for (const auto& a : fam.coords) {
        int x = e;
        for (std::size_t k = 0; k < a.size(); ++k)
            for (int i = 0; i < a[k]; ++i) x = mul[x][gens[k]];
        if (used[x]++) fail(Errc::BadParameters, "generators do not give a direct product decomposition");
        fam.idempotents.push_back(h.basis(x));
    }
    if (static_cast<int>(fam.coords.size()) != n)
        fail(Errc::BadParameters, "generators do not span the whole group");
    return fam;
}

TwoCocycle bicharacter_cocycle(const HopfData& h, const IdempotentFamily& fam, const Bicharacter& beta) {
    const std::size_t N = fam.idempotents.size();
    auto bad = [](const std::string& what) { fail(Errc::CocycleIdentityFails, "bicharacter hypotheses: " + what); };
    SparseVector sum(h.dim());
    for (std::size_t a = 0; a < N; ++a) {
        sum += fam.idempotents[a];
        for (std::size_t b = 0; b < N; ++b) {
            SparseVector p = h.mul(fam.idempotents[a], fam.idempotents[b]);
            if (!(p == (a == b ? fam.idempotents[a] : SparseVector(h.dim())))) bad("idempotents are not orthogonal");
        }
    }
    if (!(sum == h.one())) bad("idempotents do not sum to 1");
    for (std::size_t a = 0; a < N; ++a) {
        SparseTensor expect(h.legs(2));
        for (std::size_t b = 0; b < N; ++b) {
            std::vector<int> c(fam.orders.size());
            for (std::size_t k = 0; k < c.size(); ++k) c[k] = fam.coords[a][k] - fam.coords[b][k];
            expect = expect + SparseTensor::simple({fam.idempotents[b], fam.idempotents[flat_index(fam.orders, c)]});
        }
        if (!(h.coproduct(fam.idempotents[a]) == expect)) bad("Delta(e_a) != sum_{b+c=a} e_b (x) e_c");
    }
    SparseTensor F(h.legs(2)), Finv(h.legs(2));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            CycScalar v = beta(fam.coords[a], fam.coords[b]);
            if (v.is_zero()) bad("beta vanishes");
            SparseTensor t = SparseTensor::simple({fam.idempotents[a], fam.idempotents[b]});
            F = F + t.scaled(v);
            Finv = Finv + t.scaled(v.inverse());
        }
    return verify_cocycle(h, F, Finv);
}

Bicharacter standard_bicharacter(const std::vector<int>& orders, int k) {
    if (orders.empty()) fail(Errc::BadParameters, "bicharacter on the trivial group");
    const int d = orders.size() == 1 ? orders[0] : std::gcd(orders.front(), orders.back());
    const std::size_t last = orders.size() - 1;
    return [d, k, last](const std::vector<int>& a, const std::vector<int>& b) {
        return CycScalar::root_of_unity(d, static_cast<std::int64_t>(k) * a[0] * b[last]);
    };
}

// ---------------------------------------------------------------------------------------------
// Selectors and text form

TwoCocycle cocycle_from_selector(const HopfData& h, const std::string& selector) {
    auto starts = [&](const char* p) { return selector.rfind(p, 0) == 0; };
    if (selector == "trivial") return trivial_cocycle(h);
    if (selector == "klein") {
        if (h.index_of("a") >= 0 && h.index_of("b") >= 0) return cocycle_from_selector(h, "bichar:a,b:1");
        if (h.index_of("r^2") >= 0 && h.index_of("s") >= 0) return cocycle_from_selector(h, "bichar:r^2,s:1");
        if (h.index_of("d<a>") >= 0 && h.index_of("d<b>") >= 0)
            return cocycle_from_selector(h, "dual-bichar:d<a>,d<b>:1");
        fail(Errc::BadParameters, "no Klein-four subgroup known for '" + h.name() + "'");
    }
    if (starts("taft-bichar:")) return cocycle_from_selector(h, "bichar:g:" + selector.substr(12));
    if (starts("bichar:") || starts("dual-bichar:")) {
        const bool dual = starts("dual-bichar:");
        const std::string body = selector.substr(dual ? 12 : 7);
        const auto colon = body.rfind(':');
        if (colon == std::string::npos) fail(Errc::BadParameters, "expected <labels>:<k> in '" + selector + "'");
        const int k = parse_int(body.substr(colon + 1), selector);
        const auto labels = split_top_level(body.substr(0, colon), ',');
        IdempotentFamily fam;
        if (dual) {
            fam = delta_idempotents(h, labels);
        } else {
            std::vector<SparseVector> gens;
            for (const auto& l : labels) {
                const int i = h.index_of(l);
                if (i < 0) fail(Errc::BadParameters, "unknown basis label '" + l + "' in '" + h.name() + "'");
                gens.push_back(h.basis(i));
            }
            fam = character_idempotents(h, gens);
        }
        return bicharacter_cocycle(h, fam, standard_bicharacter(fam.orders, k));
    }
    if (starts("file:")) {
        std::ifstream in(selector.substr(5));
        if (!in) fail(Errc::BadParameters, "cannot open '" + selector.substr(5) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return read_cocycle(h, ss.str());
    }
    fail(Errc::BadParameters, "unknown cocycle selector '" + selector + "'");
}

std::vector<std::pair<std::string, std::string>> cocycle_selector_help() {
    return {
        {"trivial", "F = 1 (x) 1"},
        {"bichar:<g>[,<h>]:<k>",
         "sum beta(a,b) e_a (x) e_b over character idempotents of grouplike basis elements; "
         "beta = zeta_n^{k a b} for one generator, zeta_d^{k a_1 b_2} for two"},
        {"taft-bichar:<k>", "bichar:g:<k> (Taft algebras)"},
        {"dual-bichar:<x>,<y>:<k>", "bicharacter over the delta basis of a dual abelian group algebra"},
        {"klein", "a Klein-four bicharacter cocycle (k[Z2xZ2], k[D8], k[Z2xZ2]*)"},
        {"file:<path>", "text file with 'F i j = <scalar>' lines"},
    };
}

std::string write_cocycle(const TwoCocycle& c) {
    std::ostringstream os;
    os << "cocycle " << c.host().name() << "\n";
    os << "dim " << c.host().dim() << "\n";
    std::vector<int> idx(2);
    for (const auto& [k, v] : c.F().entries()) {
        c.F().decode(k, idx);
        os << "F " << idx[0] << " " << idx[1] << " = " << v.str() << "\n";
    }
    return os.str();
}

TwoCocycle read_cocycle(const HopfData& h, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    TensorBuilder b(h.legs(2));
    auto err = [&](const std::string& msg) { fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "cocycle") continue;
        if (head == "dim") {
            int d = 0;
            if (!(ls >> d) || d != h.dim()) err("dimension does not match '" + h.name() + "'");
            continue;
        }
        if (head != "F") err("unknown directive '" + head + "'");
        int i = -1, j = -1;
        std::string eq;
        if (!(ls >> i >> j >> eq) || eq != "=") err("expected 'F i j = <scalar>'");
        if (i < 0 || j < 0 || i >= h.dim() || j >= h.dim()) err("index out of range");
        std::string rest;
        std::getline(ls, rest);
        CycScalar v;
        try {
            v = CycScalar::parse(rest);
        } catch (const Error& e) {
            err(e.what());
        }
        const int ij[2] = {i, j};
        b.add(ij, v);
    }
    return verify_cocycle(h, std::move(b).finalize());
}

}  // namespace kup
