#include "kup/hopf/integrals.hpp"

#include "kup/error.hpp"
#include "kup/tensor/linalg.hpp"

namespace kup {

namespace {

/// Solves a homogeneous system row by row and returns its one-dimensional solution.
template <typename RowSource>
std::vector<CycScalar> one_dim_solution(int dim, RowSource&& rows, const std::string& what) {
    IncrementalEchelon ech(dim);
    rows([&](std::vector<CycScalar> row) {
        ech.add_row(std::move(row));
        return ech.rank() < dim - 1;  // keep going while more rank is possible
    });
    auto ns = ech.nullspace();
    if (ns.size() != 1)
        fail(Errc::DegenerateIntegralSpace,
             "space of " + what + " has dimension " + std::to_string(ns.size()) + " instead of 1");
    return ns.front();
}

}  // namespace

IntegralData integrals(const HopfData& h) {
    const int n = h.dim();
    IntegralData I;

    // Right cointegral: sum_{(j,k) in Delta(e_i)} c lambda_j e_k - lambda_i 1 = 0 for every i.
    std::vector<CycScalar> lam = one_dim_solution(
        n,
        [&](auto&& push) {
            for (int i = 0; i < n; ++i) {
                std::vector<Covector> rows(n, Covector(n));
                for (const auto& t : h.comult().at(i)) rows[t.right][t.left] += t.coeff;
                for (const auto& [k, u] : h.unit().entries()) rows[k][i] -= u;
                for (auto& r : rows)
                    if (!push(std::move(r))) return;
            }
        },
        "right cointegrals");

    // Left integral: e_i Lambda - eps(e_i) Lambda = 0 for every i.
    std::vector<CycScalar> Lam = one_dim_solution(
        n,
        [&](auto&& push) {
            for (int i = 0; i < n; ++i) {
                std::vector<Covector> rows(n, Covector(n));
                for (int j = 0; j < n; ++j) {
                    for (const auto& [k, c] : h.mult().at(i, j).entries()) rows[k][j] += c;
                    rows[j][j] -= h.counit()[i];
                }
                for (auto& r : rows)
                    if (!push(std::move(r))) return;
            }
        },
        "left integrals");

    I.lambda = lam;
    SparseVector Lv = SparseVector::from_dense(Lam);
    CycScalar norm = pair(I.lambda, Lv);
    if (norm.is_zero()) fail(Errc::NormalizationFailure, "lambda(Lambda) = 0 for '" + h.name() + "'");
    I.Lambda = Lv.scaled(norm.inverse());

    // g = (id (x) lambda) Delta(Lambda) since lambda(Lambda) = 1.
    I.g = SparseVector(n);
    for (const auto& [i, c] : I.Lambda.entries())
        for (const auto& t : h.comult().at(i))
            if (!I.lambda[t.right].is_zero()) I.g.add(t.left, c * t.coeff * I.lambda[t.right]);
    I.g_inv = h.S(I.g);

    // alpha from Lambda e_i = alpha(e_i) Lambda, read off at a fixed support index.
    const auto& [p, lp] = I.Lambda.entries().front();
    I.alpha.assign(n, CycScalar(0));
    for (int i = 0; i < n; ++i) I.alpha[i] = h.mul(I.Lambda, h.basis(i)).at(p) / lp;
    I.alpha_inv = h.antipode().pullback(I.alpha);

    // Verify every defining property.
    for (int i = 0; i < n; ++i) {
        SparseVector e = h.basis(i);
        if (!(h.mul(e, I.Lambda) == I.Lambda.scaled(h.counit()[i])))
            fail(Errc::IntegralFailure, "Lambda is not a left integral at " + h.labels()[i]);
        if (!(h.mul(I.Lambda, e) == I.Lambda.scaled(I.alpha[i])))
            fail(Errc::IntegralFailure, "Lambda h != alpha(h) Lambda at " + h.labels()[i]);
        SparseVector lhs(n), gl(n);
        for (const auto& t : h.comult().at(i)) {
            if (!I.lambda[t.left].is_zero()) lhs.add(t.right, t.coeff * I.lambda[t.left]);
            if (!I.lambda[t.right].is_zero()) gl.add(t.left, t.coeff * I.lambda[t.right]);
        }
        if (!(lhs == h.unit().scaled(I.lambda[i])))
            fail(Errc::IntegralFailure, "lambda is not a right cointegral at " + h.labels()[i]);
        if (!(gl == I.g.scaled(I.lambda[i])))
            fail(Errc::IntegralFailure, "(id (x) lambda) Delta != lambda g at " + h.labels()[i]);
    }
    if (!(h.mul(I.g, I.g_inv) == h.unit())) fail(Errc::IntegralFailure, "g is not invertible");
    if (!h.eps(I.g).is_one()) fail(Errc::IntegralFailure, "eps(g) != 1");
    return I;
}

Covector alpha_power(const HopfData& h, const IntegralData& I, int k) {
    return h.convolve_power(k >= 0 ? I.alpha : I.alpha_inv, std::abs(k));
}

SparseVector g_power(const HopfData& h, const IntegralData& I, int k) {
    SparseVector r = h.unit();
    const SparseVector& base = k >= 0 ? I.g : I.g_inv;
    for (int s = 0; s < std::abs(k); ++s) r = h.mul(r, base);
    return r;
}

SparseVector twisted_integral_element(const HopfData& h, const IntegralData& I, int n) {
    return h.left_hit(alpha_power(h, I, -n), h.S(I.Lambda));
}

Covector twisted_integral_functional(const HopfData& h, const IntegralData& I, int n) {
    return h.left_hit(g_power(h, I, n), I.lambda);
}

LinearMap T_operator(const HopfData& h, const IntegralData& I) {
    const int n = h.dim();
    const LinearMap& s_m2 = h.antipode_power(-2);
    LinearMap t(n);
    for (int i = 0; i < n; ++i) {
        SparseTensor d3 = h.delta_n(h.basis(i), 3);
        std::vector<int> idx(3);
        for (const auto& [k, c] : d3.entries()) {
            d3.decode(k, idx);
            CycScalar f = I.alpha_inv[idx[0]] * I.alpha[idx[2]];
            if (f.is_zero()) continue;
            t.col(i) += s_m2.col(idx[1]).scaled(c * f);
        }
    }
    return t;
}

LinearMap T_power(const HopfData& h, const IntegralData& I, int k) {
    LinearMap t = T_operator(h, I);
    if (k < 0) {
        auto inv = Matrix::from_map(t).inverse();
        if (!inv) fail(Errc::IntegralFailure, "T is not invertible");
        t = inv->to_map();
    }
    return t.power(std::abs(k));
}

LinearMap radford_map(const HopfData& h, const IntegralData& I) {
    const int n = h.dim();
    LinearMap r(n);
    for (int i = 0; i < n; ++i) {
        SparseVector conj = h.mul(h.mul(I.g, h.basis(i)), I.g_inv);
        r.col(i) = h.right_hit(h.left_hit(I.alpha, conj), I.alpha_inv);
    }
    return r;
}

}  // namespace kup
