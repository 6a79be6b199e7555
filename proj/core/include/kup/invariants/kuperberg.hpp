/**
 * @file kuperberg.hpp
 * @brief Evaluation of the Kuperberg invariant from an evaluation plan.
 *
 * For a plan with lower curves eta_i (n_i points each) and upper curves mu_j,
 *
 *     K = < (x)_j lambda_{-theta(mu_j)},  (x)_j word_j >,
 *
 * where the lower tensor L = (x)_i Delta^{n_i}(Lambda_{theta(eta_i)}) carries one leg per point
 * in lower order, leg r is replaced by S^{s_r} T^{t_r}(L^{[r]}), and word_j multiplies the legs
 * of the points of mu_j in its traversal order. A lower curve without points contributes
 * eps(Lambda_{theta(eta_i)}) and an upper curve without points evaluates its functional on 1.
 */
#pragma once

#include "kup/diagram/framed_diagram.hpp"
#include "kup/hopf/hopf_data.hpp"
#include "kup/hopf/integrals.hpp"

namespace kup {

/// Lambda_theta for a half-odd theta given in quarter units (theta = m - 1/2).
SparseVector lower_integral(const HopfData& h, const IntegralData& I, int theta4);

/// lambda_{-theta} for a half-odd theta given in quarter units.
Covector upper_cointegral(const HopfData& h, const IntegralData& I, int theta4);

/// The invariant of an evaluation plan. Curves that do not share points are evaluated as
/// independent factors. Within a factor each lower tensor is kept separately, sorted by the
/// order in which the upper curves visit its legs, and the contraction walks all of them as
/// interleaved tries: partial word products are shared by every term below a prefix, and a
/// prefix whose product vanishes prunes its whole subtree. The product of the lower tensors is
/// never materialized.
CycScalar kuperberg(const EvalPlan& plan, const HopfData& h, const IntegralData& I);
CycScalar kuperberg(const EvalPlan& plan, const HopfData& h);

}  // namespace kup
