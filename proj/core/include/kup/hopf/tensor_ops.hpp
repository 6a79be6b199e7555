/**
 * @file tensor_ops.hpp
 * @brief Algebra-aware manipulations of elements of H^{(x) n}: tensor powers, leg-wise
 *        products with maps, reversal, insertion and coproducts applied to single legs.
 */
#pragma once

#include <vector>

#include "kup/hopf/hopf_data.hpp"

namespace kup {

/// One factor of an output leg: the input leg, optionally passed through a linear map.
struct LegFactor {
    int leg;
    const LinearMap* map = nullptr;
};
using LegGroup = std::vector<LegFactor>;

/// Output leg r is the ordered product over groups[r] of map(input leg); an empty group
/// contributes 1. Every input leg must appear in exactly one group.
SparseTensor combine_legs(const HopfData& h, const SparseTensor& t, const std::vector<LegGroup>& groups);

/// v (x) ... (x) v with n legs (n = 0 gives the scalar 1).
SparseTensor tensor_power(const HopfData& h, const SparseVector& v, int n);
/// 1 (x) ... (x) 1 with n legs.
SparseTensor unit_tensor(const HopfData& h, int n);
/// Legs in reverse order.
SparseTensor reversed(const SparseTensor& t);
/// Applies the same map to every leg.
SparseTensor apply_all(const SparseTensor& t, const LinearMap& m);
/// I_j(w, v): the legs of w inserted before leg j of v (0-based, j in 0..arity(v)).
SparseTensor insert_tensor(const SparseTensor& w, const SparseTensor& v, int j);
/// Replaces leg `leg` by Delta^n of it (n = 0 applies the counit).
SparseTensor expand(const HopfData& h, const SparseTensor& t, int leg, int n);
/// Leg-wise product a * b.
SparseTensor leg_product(const HopfData& h, const SparseTensor& a, const SparseTensor& b);

}  // namespace kup
