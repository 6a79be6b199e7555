#include "kup/invariants/closed_forms.hpp"

#include <numeric>

#include "kup/diagram/builders.hpp"
#include "kup/error.hpp"
#include "kup/hopf/builders.hpp"
#include "kup/hopf/sweedler.hpp"
#include "kup/hopf/tensor_ops.hpp"

namespace kup {

namespace {

/// x |-> lambda(S(x)).
Covector lambda_S(const HopfData& h, const IntegralData& I) { return h.antipode().pullback(I.lambda); }

/// Sum over the entries of a single-leg tensor of coeff * f(e_i).
CycScalar pair_tensor(const Covector& f, const SparseTensor& t) {
    CycScalar out(0);
    std::vector<int> idx(1);
    for (const auto& [k, c] : t.entries()) {
        t.decode(k, idx);
        out.add_product(c, f[idx[0]]);
    }
    return out;
}

/// Sum over the entries of a two-leg tensor of coeff * f(e_a e_b).
CycScalar pair_product(const HopfData& h, const Covector& f, const SparseTensor& t) {
    CycScalar out(0);
    std::vector<int> idx(2);
    for (const auto& [k, c] : t.entries()) {
        t.decode(k, idx);
        out.add_product(c, pair(f, h.mult().at(idx[0], idx[1])));
    }
    return out;
}

/// Coefficient of e_i in S(v) for every i, as covectors.
std::vector<Covector> antipode_rows(const HopfData& h) {
    const int d = h.dim();
    std::vector<Covector> rows(d, Covector(d, CycScalar(0)));
    for (int j = 0; j < d; ++j)
        for (const auto& [i, c] : h.antipode().col(j).entries()) rows[i][j] = c;
    return rows;
}

/// Leg group for P^{(n,-k)}: legs sigma(r) = -k r mod n (0-based), each through S^{2 c}.
LegGroup shuffled_group(const HopfData& h, int n, long long step, const std::vector<int>* c) {
    LegGroup g;
    for (int r = 1; r <= n - 1; ++r) {
        const int i = residue(step * r, n);
        const int e = c ? 2 * (*c)[i - 1] : 0;
        g.push_back({i - 1, e == 0 ? nullptr : &h.antipode_power(e)});
    }
    return g;
}

void check_shuffle(int n, int k) {
    if (n < 2) fail(Errc::BadParameters, "shuffled Sweedler power needs n >= 2");
    if (std::gcd(n, ((k % n) + n) % n) != 1)
        fail(Errc::NotCoprime, "n = " + std::to_string(n) + " and k = " + std::to_string(k) + " are not coprime");
}

void check_nu_nk(int n, int k) {
    if (!(0 < k && k < n)) fail(Errc::BadParameters, "nu_{n,k} needs 0 < k < n");
    if (std::gcd(n, k) != 1) fail(Errc::NotCoprime, "nu_{n,k}: n and k are not coprime");
}

/// Ordered product of the listed legs (basis indices from idx) through optional maps.
SparseVector leg_word(const HopfData& h, const std::vector<int>& idx, int from, int to) {
    SparseVector v = h.unit();
    for (int r = from; r < to; ++r) v = h.mul(v, h.basis(idx[r]));
    return v;
}

/// Per-entry legs of the two tensors entering the genus-2 formulas.
struct XLegs {
    CycScalar c;
    SparseVector x1m2, x2m1, x3, px4;  ///< S^-2(x1), S^-1(x2), x3, product of the x4 legs
};
struct YLegs {
    CycScalar c;
    SparseVector py1, y2, y3m1, y4m2, y5;  ///< product of the y1 legs, y2, S^-1(y3), S^-2(y4), y5
};

std::vector<XLegs> x_legs(const HopfData& h, const SparseTensor& X, int x4_legs) {
    std::vector<XLegs> out;
    std::vector<int> idx(X.arity());
    for (const auto& [k, c] : X.entries()) {
        X.decode(k, idx);
        out.push_back({c, h.antipode_power(-2).col(idx[0]), h.antipode_power(-1).col(idx[1]), h.basis(idx[2]),
                       leg_word(h, idx, 3, 3 + x4_legs)});
    }
    return out;
}

std::vector<YLegs> y_legs(const HopfData& h, const SparseTensor& Y, int y1_legs, bool with_y5) {
    std::vector<YLegs> out;
    std::vector<int> idx(Y.arity());
    const int o = y1_legs;
    for (const auto& [k, c] : Y.entries()) {
        Y.decode(k, idx);
        out.push_back({c, leg_word(h, idx, 0, o), h.basis(idx[o]), h.antipode_power(-1).col(idx[o + 1]),
                       h.antipode_power(-2).col(idx[o + 2]), with_y5 ? h.basis(idx[o + 3]) : h.unit()});
    }
    return out;
}

void check_genus2(int m, int n) {
    if (m < 1 || n < 1) fail(Errc::BadParameters, "M_{m,n} needs m, n >= 1");
}

}  // namespace

std::vector<int> c_sequence(int n, int k) {
    check_lens_parameters(n, k, LensFraming::R);
    const int k0 = (n - k - 1) / 2;
    std::vector<int> c(n + 1, 0);
    int i = n;
    for (int step = 0; step < n - 1; ++step) {
        const int j = residue(i + k, n);
        c[j] = c[i] + (i <= k0 ? 1 : i <= 2 * k0 ? -1 : 0);
        i = j;
    }
    if (i != n - k || c[n - k] != 0 || c[n] != 0)
        fail(Errc::BadParameters, "c-sequence for (" + std::to_string(n) + ", " + std::to_string(k) + ") does not close");
    return {c.begin() + 1, c.end()};
}

CycScalar lens_fR_closed(int n, int k, const HopfData& h) { return lens_fR_closed(n, k, h, integrals(h)); }

CycScalar lens_fR_closed(int n, int k, const HopfData& h, const IntegralData& I) {
    const std::vector<int> c = c_sequence(n, k);
    const SparseTensor D = h.delta_n(I.Lambda, n);
    const SparseTensor T = combine_legs(h, D, {shuffled_group(h, n, -k, &c), LegGroup{{n - 1, nullptr}}});
    return pair_product(h, lambda_S(h, I), T);
}

CycScalar lens_fL_closed(int n, int k, const HopfData& h) {
    check_lens_parameters(n, k, LensFraming::L);
    return lens_fR_closed(n, n - k, opposite(h));
}

CycScalar nu(int n, const HopfData& h) { return nu(n, h, integrals(h)); }

CycScalar nu(int n, const HopfData& h, const IntegralData& I) {
    return pair(lambda_S(h, I), sweedler_power(h, n, I.Lambda));
}

CycScalar nu_nk(int n, int k, const HopfData& h) {
    check_nu_nk(n, k);
    if (k % 2 == 1) return lens_fR_closed(n, n - k, h);
    return lens_fL_closed(n, n - k, opposite(h));
}

CycScalar nu_prime(int n, int k, const HopfData& h) {
    check_nu_nk(n, k);
    if (k % 2 == 1) return lens_fL_closed(n, k, h);
    return lens_fR_closed(n, k, opposite(h));
}

CycScalar nu_tilde(int n, int k, const HopfData& h) { return nu_tilde(n, k, h, integrals(h)); }

CycScalar nu_tilde(int n, int k, const HopfData& h, const IntegralData& I) {
    check_shuffle(n, k);
    LegGroup g = shuffled_group(h, n, k, nullptr);
    g.push_back({n - 1, nullptr});
    return pair_tensor(lambda_S(h, I), combine_legs(h, h.delta_n(I.Lambda, n), {g}));
}

CycScalar nu_tilde_trace(int n, int k, const HopfData& h) {
    check_shuffle(n, k);
    const auto rows = antipode_rows(h);
    const LegGroup g = shuffled_group(h, n, k, nullptr);
    CycScalar tr(0);
    for (int i = 0; i < h.dim(); ++i) tr += pair_tensor(rows[i], combine_legs(h, h.delta_n(h.basis(i), n - 1), {g}));
    return tr;
}

CycScalar lens_fR_trace(int n, int k, const HopfData& h) {
    const std::vector<int> c = c_sequence(n, k);
    const auto rows = antipode_rows(h);
    const LegGroup g = shuffled_group(h, n, -k, &c);
    CycScalar tr(0);
    for (int i = 0; i < h.dim(); ++i) tr += pair_tensor(rows[i], combine_legs(h, h.delta_n(h.basis(i), n - 1), {g}));
    return tr;
}

CycScalar genus2(int m, int n, const HopfData& h) { return genus2(m, n, h, integrals(h)); }

CycScalar genus2(int m, int n, const HopfData& h, const IntegralData& I) {
    check_genus2(m, n);
    const Covector lamS = lambda_S(h, I);
    // Delta^4(Lambda^1) with x4 expanded by P^{(m)}; Delta^5(Lambda^2) with y1 expanded by P^{(n-1)}.
    const auto xs = x_legs(h, h.delta_n(I.Lambda, 3 + m), m);
    const auto ys = y_legs(h, h.delta_n(I.Lambda, n + 3), n - 1, true);
    CycScalar total(0);
    for (const auto& y : ys) {
        const SparseVector y4y = y.y4m2;
        for (const auto& x : xs) {
            const SparseVector a = h.mul(h.mul(h.mul(y4y, x.x2m1), y.y2), x.px4);
            const CycScalar fa = pair(lamS, a);
            if (fa.is_zero()) continue;
            const SparseVector b = h.mul(h.mul(h.mul(h.mul(y.py1, x.x3), y.y3m1), x.x1m2), y.y5);
            total.add_product(x.c * y.c, fa * pair(lamS, b));
        }
    }
    return total;
}

CycScalar genus2_psi_trace(int m, int n, const HopfData& h) {
    check_genus2(m, n);
    const auto rows = antipode_rows(h);
    CycScalar tr(0);
    for (int a = 0; a < h.dim(); ++a) {
        const auto xs = x_legs(h, h.delta_n(h.basis(a), 3 + (m - 1)), m - 1);
        for (int b = 0; b < h.dim(); ++b) {
            const auto ys = y_legs(h, h.delta_n(h.basis(b), (n - 1) + 3), n - 1, false);
            for (const auto& y : ys)
                for (const auto& x : xs) {
                    const SparseVector first = h.mul(h.mul(h.mul(y.y4m2, x.x2m1), y.y2), x.px4);
                    const CycScalar fa = pair(rows[a], first);
                    if (fa.is_zero()) continue;
                    const SparseVector second = h.mul(h.mul(h.mul(y.py1, x.x3), y.y3m1), x.x1m2);
                    tr.add_product(x.c * y.c, fa * pair(rows[b], second));
                }
        }
    }
    return tr;
}

CycScalar s2xs1_closed(int a, int b, const HopfData& h, const IntegralData& I) {
    if (g_power(h, I, a) != h.unit() || alpha_power(h, I, b) != h.counit()) return CycScalar(0);
    return pair(I.lambda, h.unit()) * h.eps(I.Lambda);
}

}  // namespace kup
