/**
 * @file closed_forms.hpp
 * @brief Algebraic formulas for the invariants of lens spaces, generalized and shuffled
 *        Frobenius-Schur indicators and the genus-2 Seifert family.
 *
 * Traces of maps built from Sweedler legs are evaluated with Radford's trace formula
 * Tr(f) = lambda(S(Lambda_(2)) f(Lambda_(1))), which needs one extra coproduct leg instead of
 * a dim x dim matrix. The *_trace variants build the matrix and take its trace; they serve as
 * independent oracles.
 *
 * Functions taking only a HopfData compute the integrals themselves; every function that needs
 * H^op builds it and solves for its integrals from scratch.
 */
#pragma once

#include <vector>

#include "kup/hopf/hopf_data.hpp"
#include "kup/hopf/integrals.hpp"

namespace kup {

/// c_1..c_n for L(n,k), n - k odd: c_n = 0 and, walking i -> i + k (mod n), c increases by one
/// for i <= k0, decreases by one for k0 < i <= 2 k0 and is unchanged afterwards, k0 = (n-k-1)/2.
/// The walk must close with c_n = c_{n-k} = 0. BadParity, NotCoprime, BadParameters.
std::vector<int> c_sequence(int n, int k);

/// K(L(n,k), f_R, H) = Tr(S o P^{(n,-k)}), where P^{(n,-k)}(x) is the product over r = 1..n-1
/// of S^{2 c_{sigma(r)}}(x_(sigma(r))) with sigma(r) = -k r mod n, taken over Delta^{n-1}(x).
CycScalar lens_fR_closed(int n, int k, const HopfData& h, const IntegralData& I);
CycScalar lens_fR_closed(int n, int k, const HopfData& h);

/// K(L(n,k), f_L, H) = K(L(n,n-k), f_R, H^op).
CycScalar lens_fL_closed(int n, int k, const HopfData& h);

/// nu_n(H) = lambda S(P^{(n)}(Lambda)) for every integer n (P^{(0)} = eps 1, negative n uses S).
CycScalar nu(int n, const HopfData& h, const IntegralData& I);
CycScalar nu(int n, const HopfData& h);

/// nu_{n,k}: K(L(n,n-k), f_R, H) for k odd, K(L(n,n-k), f_L, H^op) for k even.
CycScalar nu_nk(int n, int k, const HopfData& h);

/// nu'_{n,k}: K(L(n,k), f_L, H) for k odd, K(L(n,k), f_R, H^op) for k even.
CycScalar nu_prime(int n, int k, const HopfData& h);

/// Shuffled indicator lambda S(Lambda_(k) Lambda_(2k) ... Lambda_((n-1)k) Lambda_(n)), indices
/// mod n in 1..n; k is any integer coprime to n, n >= 2.
CycScalar nu_tilde(int n, int k, const HopfData& h, const IntegralData& I);
CycScalar nu_tilde(int n, int k, const HopfData& h);

/// Tr(S o P~^{(n,k)}) as a matrix trace, P~(x) = x_(k) x_(2k) ... x_((n-1)k) over Delta^{n-1}(x).
CycScalar nu_tilde_trace(int n, int k, const HopfData& h);

/// Tr(S o P^{(n,-k)}) as a matrix trace (no integrals involved).
CycScalar lens_fR_trace(int n, int k, const HopfData& h);

/// K(M_{m,n}) as the product of two lambda S-terms over Delta^4(Lambda^1) (x) Delta^5(Lambda^2):
///   lambda S(S^-2(y4) S^-1(x2) y2 P^{(m)}(x4)) * lambda S(P^{(n-1)}(y1) x3 S^-1(y3) S^-2(x1) y5).
CycScalar genus2(int m, int n, const HopfData& h, const IntegralData& I);
CycScalar genus2(int m, int n, const HopfData& h);

/// Tr((S (x) S) o Psi^{m,n}) as a trace over basis pairs, with
///   Psi(x (x) y) = S^-2(y4) S^-1(x2) y2 P^{(m-1)}(x4) (x) P^{(n-1)}(y1) x3 S^-1(y3) S^-2(x1).
CycScalar genus2_psi_trace(int m, int n, const HopfData& h);

/// K(S^2 x S^1) for the framing with theta(mu) = -(a - 1/2), theta(eta) = -(b+1) - 1/2:
/// lambda(1) eps(Lambda) when g^a = 1 and alpha^b = eps, else 0.
CycScalar s2xs1_closed(int a, int b, const HopfData& h, const IntegralData& I);

}  // namespace kup
