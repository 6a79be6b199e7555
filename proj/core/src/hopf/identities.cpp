#include "kup/hopf/identities.hpp"

#include <random>

#include "kup/hopf/sweedler.hpp"

namespace kup {

namespace {

struct Term2 {
    int l, r;
    CycScalar c;
};
struct Term3 {
    int a, b, c;
    CycScalar coeff;
};

std::vector<Term2> terms2(const SparseTensor& t) {
    std::vector<Term2> out;
    std::vector<int> idx(2);
    for (const auto& [k, c] : t.entries()) {
        t.decode(k, idx);
        out.push_back({idx[0], idx[1], c});
    }
    return out;
}

std::vector<Term3> terms3(const SparseTensor& t) {
    std::vector<Term3> out;
    std::vector<int> idx(3);
    for (const auto& [k, c] : t.entries()) {
        t.decode(k, idx);
        out.push_back({idx[0], idx[1], idx[2], c});
    }
    return out;
}

}  // namespace

std::vector<NamedMap> test_maps(const HopfData& h, std::uint64_t seed, int random_maps) {
    std::vector<NamedMap> maps{{"id", LinearMap::identity(h.dim())},
                               {"S", h.antipode()},
                               {"S^2", h.antipode_power(2)}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> pick(0, h.dim() - 1);
    for (int m = 0; m < random_maps; ++m) {
        LinearMap x(h.dim());
        for (int j = 0; j < h.dim(); ++j)
            for (int k = 0; k < 2; ++k) x.col(j).add(pick(rng), CycScalar(val(rng)));
        maps.push_back({"R" + std::to_string(m), std::move(x)});
    }
    return maps;
}

SuiteReport identity_suite(const HopfData& h, const IntegralData& I, std::uint64_t seed, int max_power) {
    SuiteReport rep;
    rep.seed = seed;
    const int n = h.dim();
    const auto& L = h.labels();
    const Covector lamS = h.antipode().pullback(I.lambda);  // x -> lambda(S(x))
    const auto maps = test_maps(h, seed);
    const auto dL = terms2(h.coproduct(I.Lambda));
    const auto dL3 = terms3(h.delta_n(I.Lambda, 3));
    const LinearMap& S = h.antipode();
    const LinearMap& S2 = h.antipode_power(2);

    // Cointegral swaps.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SparseVector ea = h.basis(a), eb = h.basis(b);
            SparseVector ab = h.mul(ea, eb);
            SparseVector rhs1 = h.mul(S2.apply(h.right_hit(eb, I.alpha)), ea);
            rep.add("cointegral-swap", "(" + L[a] + ", " + L[b] + ")", pair(I.lambda, ab) == pair(I.lambda, rhs1));
            SparseVector rhs2 = h.mul(eb, S.apply(h.right_hit(S.apply(ea), I.alpha)));
            rep.add("cointegral-antipode-swap", "(" + L[a] + ", " + L[b] + ")", pair(lamS, ab) == pair(lamS, rhs2));
        }

    // Moving elements across the legs of Delta(Lambda).
    const SparseTensor DL = h.coproduct(I.Lambda);
    for (int a = 0; a < n; ++a) {
        SparseVector ea = h.basis(a);
        LinearMap left_a = h.left_mult(ea), left_Sa = h.left_mult(S.apply(ea));
        SparseTensor lhs3 = DL.apply_on_leg(1, left_a);
        SparseTensor rhs3 = DL.apply_on_leg(0, left_Sa);
        rep.add("integral-move-left", "(" + L[a] + ")", lhs3 == rhs3);
        LinearMap right_a = h.right_mult(ea);
        LinearMap right_rhs = h.right_mult(S.apply(h.right_hit(ea, I.alpha)));
        rep.add("integral-move-right", "(" + L[a] + ")", DL.apply_on_leg(0, right_a) == DL.apply_on_leg(1, right_rhs));
    }

    // Trace formula and antipode-cointegral move.
    for (const auto& [name, X] : maps) {
        CycScalar tr = X.trace();
        CycScalar f1(0), f2(0);
        for (const auto& t : dL) {
            f1 += t.c * pair(I.lambda, h.mul(S.col(t.r), X.col(t.l)));
            f2 += t.c * pair(I.lambda, h.mul(S.apply(X.col(t.r)), h.basis(t.l)));
        }
        rep.add("trace-formula", name, tr == f1 && tr == f2);
        for (int a = 0; a < n; ++a) {
            SparseVector ea = h.basis(a), Sa = S.col(a);
            CycScalar lhs(0), rhs(0);
            for (const auto& t : dL) {
                lhs += t.c * pair(lamS, h.mul(h.mul(ea, X.col(t.l)), h.basis(t.r)));
                rhs += t.c * pair(lamS, h.mul(X.apply(h.mul(h.basis(t.l), Sa)), h.basis(t.r)));
            }
            rep.add("antipode-cointegral-move", name + " (" + L[a] + ")", lhs == rhs);
        }
    }

    // Moves across Sweedler powers of Lambda.
    for (int p = 1; p <= max_power; ++p) {
        const LinearMap Pn = sweedler_power_map(h, p);
        const LinearMap Pn1 = sweedler_power_map(h, p - 1);
        for (const auto& [name, Y] : maps) {
            for (int x = 0; x < n; ++x) {
                SparseVector ex = h.basis(x);
                const auto dx = terms3(h.delta_n(ex, 3));
                // Left move.
                CycScalar lhs(0), rhs(0);
                for (const auto& t : dL) {
                    SparseVector pr = Pn.col(t.r);
                    lhs += t.c * pair(lamS, h.mul(h.mul(ex, Y.col(t.l)), pr));
                    for (const auto& u : dx) {
                        SparseVector inner = h.mul(h.mul(S2.col(u.a), h.basis(t.l)), S.col(u.c));
                        SparseVector w = h.mul(h.mul(Y.apply(inner), S2.col(u.b)), pr);
                        rhs += t.c * u.coeff * pair(lamS, w);
                    }
                }
                rep.add("power-move-left", name + " n=" + std::to_string(p) + " (" + L[x] + ")", lhs == rhs);
                // Right move.
                CycScalar lhs2(0), rhs2(0);
                for (const auto& t : dL3) {
                    SparseVector p1 = Pn1.col(t.a);
                    lhs2 += t.coeff * pair(lamS, h.mul(h.mul(h.mul(p1, Y.col(t.b)), ex), h.basis(t.c)));
                    for (const auto& u : dx) {
                        SparseVector inner = h.mul(h.mul(S.col(u.a), h.basis(t.b)), S2.col(u.c));
                        SparseVector w = h.mul(h.mul(h.mul(p1, S2.col(u.b)), Y.apply(inner)), h.basis(t.c));
                        rhs2 += t.coeff * u.coeff * pair(lamS, w);
                    }
                }
                rep.add("power-move-right", name + " n=" + std::to_string(p) + " (" + L[x] + ")", lhs2 == rhs2);
            }
        }
    }
    return rep;
}

}  // namespace kup
