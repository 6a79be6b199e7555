/**
 * @file builders.hpp
 * @brief Constructors for concrete Hopf algebras: group algebras, Taft algebras,
 *        duals, opposites and tensor products.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kup/hopf/hopf_data.hpp"

namespace kup {

/// Multiplication table of a finite group: mul[i][j] = index of g_i g_j.
struct GroupTable {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> mul;

    [[nodiscard]] int order() const { return static_cast<int>(labels.size()); }
    [[nodiscard]] int identity() const;
    [[nodiscard]] int inverse(int g) const;
    /// Checks closure, associativity, identity and inverses; throws NotAGroup.
    void validate() const;
    /// Number of x with x^n = 1 by direct enumeration (n may be negative or zero).
    [[nodiscard]] int count_roots(int n) const;
    /// Parses the line format `elements a b ...` followed by one row of labels per element.
    static GroupTable parse(std::string_view text);
};

GroupTable cyclic_group(int n);
GroupTable klein_four_group();
GroupTable symmetric_group_3();
GroupTable quaternion_group();
GroupTable dihedral_group_8();
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// k[G]: basis G, Delta(g) = g (x) g, S(g) = g^{-1}, eps(g) = 1.
HopfData group_algebra(const GroupTable& g);

/// Taft algebra T(zeta): generators g, x with x^n = 0, g^n = 1, g x = zeta x g,
/// Delta(g) = g (x) g, Delta(x) = x (x) g + 1 (x) x. Basis x^i g^j at index i*n + j.
HopfData taft(int n, const CycScalar& zeta);
HopfData taft(int n);  ///< zeta = zeta_n

HopfData dual(const HopfData& h);
HopfData opposite(const HopfData& h);
/// H (x) K with interleaved basis index i*dim(K) + j.
HopfData tensor_product(const HopfData& h, const HopfData& k);

}  // namespace kup
