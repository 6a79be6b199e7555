/**
 * @file integrals.hpp
 * @brief Normalized integral/cointegral pairs, distinguished grouplikes and their twists.
 *
 * Conventions:
 *  - Lambda is a left integral: h Lambda = eps(h) Lambda.
 *  - lambda is a right cointegral: lambda(h_(1)) h_(2) = lambda(h) 1.
 *  - g is the grouplike with (id (x) lambda) Delta(h) = lambda(h) g.
 *  - alpha is the algebra map with Lambda h = alpha(h) Lambda.
 *  - lambda(Lambda) = 1.
 */
#pragma once

#include "kup/hopf/hopf_data.hpp"

namespace kup {

struct IntegralData {
    SparseVector Lambda;  ///< left integral
    Covector lambda;      ///< right cointegral, lambda(Lambda) = 1
    SparseVector g;       ///< distinguished grouplike of H
    SparseVector g_inv;
    Covector alpha;       ///< distinguished grouplike of H*
    Covector alpha_inv;
};

/// Solves for the integral pair; asserts every defining property before returning.
IntegralData integrals(const HopfData& h);

enum class IntegralSide { element, functional };

/// Lambda_{n-1/2} = alpha^{-n} -> S(Lambda).
SparseVector twisted_integral_element(const HopfData& h, const IntegralData& I, int n);
/// lambda_{n-1/2} = g^n -> lambda, i.e. x |-> lambda(x g^n).
Covector twisted_integral_functional(const HopfData& h, const IntegralData& I, int n);

/// Convolution power alpha^k for any integer k.
Covector alpha_power(const HopfData& h, const IntegralData& I, int k);
/// g^k for any integer k.
SparseVector g_power(const HopfData& h, const IntegralData& I, int k);

/// T(x) = alpha^{-1}(x_(1)) S^{-2}(x_(2)) alpha(x_(3)) as a matrix.
LinearMap T_operator(const HopfData& h, const IntegralData& I);
/// T^k for any integer k.
LinearMap T_power(const HopfData& h, const IntegralData& I, int k);

/// Radford's formula as a matrix: h |-> alpha -> (g h g^{-1}) <- alpha^{-1}.
LinearMap radford_map(const HopfData& h, const IntegralData& I);

}  // namespace kup
