/**
 * @file sweedler.hpp
 * @brief Sweedler powers and related multi-leg evaluations.
 */
#pragma once

#include "kup/hopf/hopf_data.hpp"

namespace kup {

/// P^(n)(x): n > 0 multiplies the legs of Delta^n(x) in order, P^(0)(x) = eps(x) 1,
/// and P^(-n)(x) = S(x_(1)) ... S(x_(n)).
SparseVector sweedler_power(const HopfData& h, int n, const SparseVector& x);

/// Sweedler power as a linear map on H.
LinearMap sweedler_power_map(const HopfData& h, int n);

}  // namespace kup
