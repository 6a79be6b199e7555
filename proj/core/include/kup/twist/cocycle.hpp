/**
 * @file cocycle.hpp
 * @brief Verified 2-cocycles F in H (x) H, the iterated tensors F_n, Drinfeld twists H_F
 *        and constructors for bicharacter cocycles.
 *
 * Conventions:
 *  - F is a gauge transformation: invertible with (eps (x) id)F = (id (x) eps)F = 1.
 *  - Cocycle identity: (1 (x) F)(id (x) Delta)(F)(Delta (x) id)(F^{-1})(F^{-1} (x) 1) = 1 (x) 1.
 *  - F_1 = 1, F_{n+1} = (1 (x) F_n)(id (x) Delta^n)(F); F_0 is the scalar 1.
 *  - u = f1 S(f2), u^{-1} = S(d1) d2 where F^{-1} = d1 (x) d2.
 *  - H_F: same algebra and counit, Delta_F(h) = F Delta(h) F^{-1}, S_F(h) = u S(h) u^{-1}.
 *  - Q = u S(u^{-1}), Q_0 = 1, Q_{s+1} = Q_s S^{2s}(Q), so that S_F^{2s}(x) = Q_s S^{2s}(x) Q_s^{-1}.
 */
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kup/hopf/builders.hpp"
#include "kup/hopf/hopf_data.hpp"

namespace kup {

class TwoCocycle {
public:
    [[nodiscard]] const HopfData& host() const noexcept { return *host_; }
    [[nodiscard]] const SparseTensor& F() const noexcept { return F_; }
    [[nodiscard]] const SparseTensor& F_inv() const noexcept { return Finv_; }
    [[nodiscard]] const SparseVector& u() const noexcept { return u_; }
    [[nodiscard]] const SparseVector& u_inv() const noexcept { return uinv_; }
    [[nodiscard]] const SparseVector& Q() const noexcept { return Q_; }
    [[nodiscard]] const SparseVector& Q_inv() const noexcept { return Qinv_; }
    /// Q_s for any integer s.
    [[nodiscard]] SparseVector Q_s(int s) const;
    /// Q_s^{-1} for any integer s.
    [[nodiscard]] SparseVector Q_s_inv(int s) const;
    /// F_n (n >= 0), memoized.
    [[nodiscard]] const SparseTensor& F_n(int n) const;
    /// F_n^{-1} (n >= 0), memoized.
    [[nodiscard]] const SparseTensor& F_n_inv(int n) const;
    /// True when F = 1 (x) 1.
    [[nodiscard]] bool is_trivial() const;

private:
    friend TwoCocycle verify_cocycle(const HopfData&, const SparseTensor&, std::optional<SparseTensor>);
    TwoCocycle() = default;

    std::shared_ptr<const HopfData> host_;
    SparseTensor F_, Finv_;
    SparseVector u_, uinv_, Q_, Qinv_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Validates F (computing F^{-1} when not supplied). Checks, in order: invertibility
/// (NotInverse), normalization (NotGaugeTransform), cocycle identity (CocycleIdentityFails).
TwoCocycle verify_cocycle(const HopfData& h, const SparseTensor& F, std::optional<SparseTensor> Finv = std::nullopt);

/// F = 1 (x) 1.
TwoCocycle trivial_cocycle(const HopfData& h);

/// Inverse of an element of H (x) H, if it exists.
std::optional<SparseTensor> tensor_inverse(const HopfData& h, const SparseTensor& t);

/// F_{n} through the mirrored recursion F_{n+1} = (F_n (x) 1)(Delta^n (x) id)(F).
SparseTensor F_n_mirrored(const TwoCocycle& c, int n);

/// H_F; verify_axioms is run on the result (AxiomFailure otherwise).
HopfData drinfeld_twist(const HopfData& h, const TwoCocycle& c);

/// A complete family of orthogonal idempotents e_a indexed by a finite abelian group
/// A = Z_{orders[0]} x ... with Delta(e_a) = sum_{b + c = a} e_b (x) e_c.
struct IdempotentFamily {
    std::vector<int> orders;                ///< cyclic factors of A
    std::vector<std::vector<int>> coords;   ///< coordinates of each index a
    std::vector<SparseVector> idempotents;  ///< e_a, same order as coords
};

/// e_a = prod_k (1/n_k) sum_i zeta_{n_k}^{-i a_k} g_k^i for commuting grouplikes g_k of order n_k.
IdempotentFamily character_idempotents(const HopfData& h, const std::vector<SparseVector>& grouplikes);
/// Basis delta functions of a dual group algebra k^G (G abelian), indexed by G through
/// the coordinates relative to the given generator labels.
IdempotentFamily delta_idempotents(const HopfData& h, const std::vector<std::string>& generator_labels);

using Bicharacter = std::function<CycScalar(const std::vector<int>&, const std::vector<int>&)>;

/// F = sum beta(a, b) e_a (x) e_b with F^{-1} = sum beta(a, b)^{-1} e_a (x) e_b, checked
/// for the family hypotheses and then passed through verify_cocycle.
TwoCocycle bicharacter_cocycle(const HopfData& h, const IdempotentFamily& fam, const Bicharacter& beta);

/// beta(a, b) = zeta_d^{k a_0 b_last}: for one factor this is zeta_n^{k a b}; for two factors
/// it pairs the first coordinate of a with the second of b, d = gcd of the orders.
Bicharacter standard_bicharacter(const std::vector<int>& orders, int k);

/// Order of a grouplike element (0 if not grouplike).
int grouplike_order(const HopfData& h, const SparseVector& g);

/// Builds a cocycle from a selector:
///   trivial
///   bichar:<label>[,<label>]:<k>       character idempotents of grouplike basis elements
///   taft-bichar:<k>                    same as bichar:g:<k>
///   dual-bichar:<label>,<label>:<k>    delta idempotents of a dual abelian group algebra
///   klein                              a Klein-four bicharacter cocycle chosen for the algebra
///   file:<path>                        text file of `F i j = <scalar>` lines
TwoCocycle cocycle_from_selector(const HopfData& h, const std::string& selector);
std::vector<std::pair<std::string, std::string>> cocycle_selector_help();

/// Text form: `cocycle <name>`, `dim <n>`, then `F i j = <scalar>` lines.
std::string write_cocycle(const TwoCocycle& c);
TwoCocycle read_cocycle(const HopfData& h, std::string_view text);

}  // namespace kup
