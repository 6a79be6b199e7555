/**
 * @file builders.hpp
 * @brief Framed diagrams and evaluation plans for lens spaces, the 3-sphere, S^2 x S^1,
 *        S^3/Q8 and the genus-2 Seifert family M_{m,n}.
 *
 * Lens spaces L(n,k) with 0 < k < n, gcd(n,k) = 1, come with two diagram framings:
 *  - f_R (n - k odd): one lower and one upper curve through p_1..p_n, the upper curve visits
 *    p_n, p_k, p_2k, ... (indices mod n) and ends at p_{n-k}; s_n = 1 and
 *    s_{i+k} = s_i + 2 for i <= k0, s_i - 2 for k0 < i < n-k, s_i for i >= n-k, k0 = (n-k-1)/2.
 *  - f_L (k odd): the upper curve visits p_1, p_{1+k}, p_{1+2k}, ... and ends at p_{n-k+1};
 *    s_1 = 1 and s_{i+k} = s_i for i <= n-k+1, s_i + 2 for n-k+2 <= i <= n-k1,
 *    s_i - 2 for i > n-k1, k1 = (k-1)/2.
 * The *_plan builders run these exponent recursions directly; the *_diagram builders walk the
 * upper curve accumulating tangent rotations and go through compile_plan, so the two routes
 * are independent.
 */
#pragma once

#include <string>
#include <vector>

#include "kup/diagram/framed_diagram.hpp"

namespace kup {

enum class LensFraming { R, L };

/// Residue of a in 1..n.
int residue(long long a, int n);

/// Validates (n, k) for a lens framing: BadParameters unless 0 < k < n, NotCoprime, and
/// BadParity when n - k (f_R) or k (f_L) is even.
void check_lens_parameters(int n, int k, LensFraming f);

EvalPlan lens_fR_plan(int n, int k);
EvalPlan lens_fL_plan(int n, int k);
EvalPlan lens_plan(int n, int k, LensFraming f);

FramedDiagram lens_fR_diagram(int n, int k);
FramedDiagram lens_fL_diagram(int n, int k);
FramedDiagram lens_diagram(int n, int k, LensFraming f);

/// Genus-1 diagram of S^3: one point, theta_eta = 1/4, theta_mu = 0, totals 1/2 | 1/2, -1/2.
FramedDiagram s3_diagram();

/// Genus-1 diagram of S^2 x S^1 with no intersection points. The framing is parameterized by
/// theta(mu) = -(a - 1/2) and theta(eta) = -(b + 1) - 1/2 (phi set to keep admissibility);
/// a = 0, b = -1 gives theta(eta) = -1/2, theta(mu) = 1/2.
FramedDiagram s2xs1_diagram(int a = 0, int b = -1);

/// Genus-2 diagram of S^3/Q8 with the tabulated rotations of its eight points.
FramedDiagram q8_diagram();

/// Genus-2 diagram of M_{m,n} = X(2, m+1, n+1), m, n >= 1 (BadParameters otherwise):
/// lower curves through p_1..p_{m+3} and q_1..q_{n+3}.
FramedDiagram seifert_diagram(int m, int n);

/// Fixture by name: s3, s2xs1, q8, seifert:<m>:<n>, lens:<n>:<k>:<fR|fL>.
FramedDiagram fixture_diagram(const std::string& name);

/// Fixture names covered by sweeps, in a fixed order.
std::vector<std::string> fixture_names();

}  // namespace kup
