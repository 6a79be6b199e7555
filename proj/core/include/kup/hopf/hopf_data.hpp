/**
 * @file hopf_data.hpp
 * @brief Finite-dimensional Hopf algebras given by structure constants.
 *
 * Conventions: mult.at(i, j) is e_i * e_j; comult.at(i) lists the terms
 * c * e_l (x) e_r of Delta(e_i); antipode.col(i) is S(e_i).
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kup/tensor/sparse.hpp"

namespace kup {

class HopfData {
public:
    HopfData() = default;
    /// Assembles a Hopf algebra; the antipode inverse is computed (zero map if S is singular).
    HopfData(std::string name, std::vector<std::string> labels, BilinearTable mult, SparseVector unit,
             CoproductTable comult, Covector counit, LinearMap antipode);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] const BilinearTable& mult() const noexcept { return mult_; }
    [[nodiscard]] const SparseVector& unit() const noexcept { return unit_; }
    [[nodiscard]] const CoproductTable& comult() const noexcept { return comult_; }
    [[nodiscard]] const Covector& counit() const noexcept { return counit_; }
    [[nodiscard]] const LinearMap& antipode() const noexcept { return antipode_; }
    [[nodiscard]] const LinearMap& antipode_inv() const noexcept { return antipode_inv_; }
    [[nodiscard]] bool antipode_invertible() const noexcept { return antipode_invertible_; }
    /// Index of a basis label, or -1.
    [[nodiscard]] int index_of(const std::string& label) const;

    /// S^k for any integer k (negative powers use the inverse); cached.
    [[nodiscard]] const LinearMap& antipode_power(int k) const;

    // ---- Algebra-level helpers on vectors.
    [[nodiscard]] SparseVector basis(int i) const { return SparseVector::basis(dim_, i); }
    [[nodiscard]] SparseVector one() const { return unit_; }
    [[nodiscard]] SparseVector mul(const SparseVector& a, const SparseVector& b) const { return mult_.apply(a, b); }
    [[nodiscard]] SparseVector S(const SparseVector& a, int k = 1) const { return antipode_power(k).apply(a); }
    [[nodiscard]] CycScalar eps(const SparseVector& a) const { return pair(counit_, a); }
    /// Delta(a) as a 2-leg tensor.
    [[nodiscard]] SparseTensor coproduct(const SparseVector& a) const;
    /// Delta^n(a) with n legs; n = 0 yields the arity-0 tensor eps(a).
    [[nodiscard]] SparseTensor delta_n(const SparseVector& a, int n) const;
    /// Multiply all legs of t (in order) into a single vector.
    [[nodiscard]] SparseVector multiply_all(const SparseTensor& t) const;

    // ---- Functionals.
    /// (f * g)(x) = f(x_(1)) g(x_(2))
    [[nodiscard]] Covector convolve(const Covector& f, const Covector& g) const;
    /// Convolution power f^n (n >= 0); f^0 = eps.
    [[nodiscard]] Covector convolve_power(const Covector& f, int n) const;
    /// f -> h = h_(1) f(h_(2))
    [[nodiscard]] SparseVector left_hit(const Covector& f, const SparseVector& h) const;
    /// h <- f = f(h_(1)) h_(2)
    [[nodiscard]] SparseVector right_hit(const SparseVector& h, const Covector& f) const;
    /// (h -> f)(x) = f(x h)
    [[nodiscard]] Covector left_hit(const SparseVector& h, const Covector& f) const;
    /// (f <- h)(x) = f(h x)
    [[nodiscard]] Covector right_hit(const Covector& f, const SparseVector& h) const;
    /// Left multiplication x -> a x as a linear map.
    [[nodiscard]] LinearMap left_mult(const SparseVector& a) const;
    /// Right multiplication x -> x a as a linear map.
    [[nodiscard]] LinearMap right_mult(const SparseVector& a) const;

    /// Tensor-leg dims for n legs over this algebra.
    [[nodiscard]] std::vector<int> legs(int n) const { return std::vector<int>(n, dim_); }

private:
    std::string name_;
    int dim_ = 0;
    std::vector<std::string> labels_;
    BilinearTable mult_;
    SparseVector unit_;
    CoproductTable comult_;
    Covector counit_;
    LinearMap antipode_;
    LinearMap antipode_inv_;
    bool antipode_invertible_ = false;

    struct PowerCache;
    std::shared_ptr<PowerCache> powers_;
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::string witness;  ///< first failing basis tuple, labelled
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const AxiomCheck* find(const std::string& name) const;
};

/// Evaluates every Hopf axiom on basis elements; failures carry a witness.
AxiomReport verify_axioms(const HopfData& h);

}  // namespace kup
