/**
 * @file sparse.hpp
 * @brief Sparse vectors, linear/bilinear tables and multi-leg tensors over CycScalar.
 *
 * A SparseTensor stores the nonzero coefficients of an element of
 * V_1 (x) ... (x) V_n with respect to product bases. Index tuples are packed
 * into a 64-bit mixed-radix key with leg 0 most significant, so sorting by
 * key is lexicographic order on tuples; iteration order is deterministic.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kup/scalar/cyclotomic.hpp"

namespace kup {

/// Sparse vector: sorted (basis index, nonzero coefficient) pairs.
class SparseVector {
public:
    using Entry = std::pair<int, CycScalar>;

    SparseVector() = default;
    explicit SparseVector(int dim) : dim_(dim) {}
    static SparseVector basis(int dim, int i, CycScalar c = CycScalar(1));
    static SparseVector from_dense(const std::vector<CycScalar>& v);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] bool is_zero() const noexcept { return entries_.empty(); }
    [[nodiscard]] CycScalar at(int i) const;
    [[nodiscard]] std::vector<CycScalar> to_dense() const;

    /// Adds c * e_i, keeping the representation sorted and zero-free.
    void add(int i, const CycScalar& c);
    SparseVector& operator+=(const SparseVector& o);
    SparseVector& operator-=(const SparseVector& o);
    [[nodiscard]] SparseVector scaled(const CycScalar& c) const;

    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend bool operator==(const SparseVector& a, const SparseVector& b);

private:
    int dim_ = 0;
    std::vector<Entry> entries_;
};

/// Dense linear functional on a dim-dimensional space.
using Covector = std::vector<CycScalar>;

CycScalar pair(const Covector& f, const SparseVector& v);

/// Linear map stored by columns: column j is the image of basis vector e_j.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(int dim) : cols_(dim, SparseVector(dim)) {}
    static LinearMap identity(int dim);
    static LinearMap zero(int dim) { return LinearMap(dim); }

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(cols_.size()); }
    [[nodiscard]] const SparseVector& col(int j) const { return cols_[j]; }
    SparseVector& col(int j) { return cols_[j]; }
    [[nodiscard]] CycScalar at(int i, int j) const { return cols_[j].at(i); }

    [[nodiscard]] SparseVector apply(const SparseVector& v) const;
    /// Composition (*this) o other.
    [[nodiscard]] LinearMap compose(const LinearMap& other) const;
    [[nodiscard]] LinearMap transpose() const;
    [[nodiscard]] LinearMap power(int e) const;  // e >= 0
    [[nodiscard]] CycScalar trace() const;
    [[nodiscard]] bool is_zero() const;
    /// Functional f o M.
    [[nodiscard]] Covector pullback(const Covector& f) const;

    friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
    friend bool operator==(const LinearMap& a, const LinearMap& b);

private:
    std::vector<SparseVector> cols_;
};

/// Bilinear map V x V -> V on basis pairs (the multiplication table).
class BilinearTable {
public:
    BilinearTable() = default;
    explicit BilinearTable(int dim) : dim_(dim), table_(static_cast<std::size_t>(dim) * dim, SparseVector(dim)) {}

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const SparseVector& at(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }
    SparseVector& at(int i, int j) { return table_[static_cast<std::size_t>(i) * dim_ + j]; }

    [[nodiscard]] SparseVector apply(const SparseVector& a, const SparseVector& b) const;
    /// a * e_j
    [[nodiscard]] SparseVector right_basis(const SparseVector& a, int j) const;

private:
    int dim_ = 0;
    std::vector<SparseVector> table_;
};

/// Coproduct-shaped map V -> V (x) V on basis vectors.
class CoproductTable {
public:
    struct Term {
        int left;
        int right;
        CycScalar coeff;
    };
    CoproductTable() = default;
    explicit CoproductTable(int dim) : rows_(dim) {}

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] const std::vector<Term>& at(int i) const { return rows_[i]; }
    std::vector<Term>& at(int i) { return rows_[i]; }

private:
    std::vector<std::vector<Term>> rows_;
};

class SparseTensor;

/// Accumulates tensor entries in a hash map; finalize() sorts and drops zeros.
class TensorBuilder {
public:
    explicit TensorBuilder(std::vector<int> dims);
    void add(std::uint64_t key, const CycScalar& c);
    void add_product(std::uint64_t key, const CycScalar& a, const CycScalar& b);
    void add(std::span<const int> idx, const CycScalar& c);
    [[nodiscard]] const std::vector<int>& dims() const noexcept { return dims_; }
    [[nodiscard]] std::uint64_t encode(std::span<const int> idx) const;
    SparseTensor finalize() &&;

private:
    std::vector<int> dims_;
    std::vector<std::uint64_t> strides_;
    std::unordered_map<std::uint64_t, CycScalar> acc_;
};

class SparseTensor {
public:
    using Key = std::uint64_t;
    using Entry = std::pair<Key, CycScalar>;

    SparseTensor() : SparseTensor(std::vector<int>{}) {}
    explicit SparseTensor(std::vector<int> dims);

    /// Arity-0 tensor holding a scalar.
    static SparseTensor scalar(const CycScalar& c);
    static SparseTensor from_vector(const SparseVector& v);
    static SparseTensor basis(std::vector<int> dims, std::span<const int> idx, CycScalar c = CycScalar(1));
    /// a_1 (x) ... (x) a_n
    static SparseTensor simple(const std::vector<SparseVector>& factors);

    [[nodiscard]] int arity() const noexcept { return static_cast<int>(dims_.size()); }
    [[nodiscard]] const std::vector<int>& dims() const noexcept { return dims_; }
    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t nnz() const noexcept { return entries_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return entries_.empty(); }

    [[nodiscard]] Key encode(std::span<const int> idx) const;
    void decode(Key k, std::span<int> idx) const;
    [[nodiscard]] std::vector<int> decode(Key k) const;
    [[nodiscard]] CycScalar at(std::span<const int> idx) const;
    /// Value of an arity-0 tensor.
    [[nodiscard]] CycScalar scalar_value() const;
    /// Single-leg tensor as a vector.
    [[nodiscard]] SparseVector to_vector() const;

    /// Output leg r carries input leg sigma[r] (0-based).
    [[nodiscard]] SparseTensor permute_legs(std::span<const int> sigma) const;
    /// Applies M to one leg.
    [[nodiscard]] SparseTensor apply_on_leg(int leg, const LinearMap& m) const;
    /// Applies one map per leg (nullptr = identity).
    [[nodiscard]] SparseTensor apply_per_leg(const std::vector<const LinearMap*>& maps) const;
    /// Pairs the listed legs with covectors; those legs disappear.
    [[nodiscard]] SparseTensor contract_with_covector(std::span<const int> legs, const std::vector<Covector>& phis) const;
    /// Replaces the ordered legs by their product, placed at the smallest listed position.
    [[nodiscard]] SparseTensor multiply_legs(std::span<const int> group, const BilinearTable& m) const;
    /// Replaces one leg by n legs via the iterated coproduct (n = 0 contracts with the counit).
    [[nodiscard]] SparseTensor expand_leg(int leg, int n, const CoproductTable& delta, const Covector& counit) const;
    /// Leg-wise product (a_1 b_1) (x) ... (x) (a_n b_n).
    [[nodiscard]] SparseTensor mul(const SparseTensor& other, const BilinearTable& m) const;
    /// Tensor product of two tensors (legs of *this first).
    [[nodiscard]] SparseTensor outer(const SparseTensor& other) const;
    /// Inserts a new leg at position pos carrying vector v.
    [[nodiscard]] SparseTensor insert_leg(int pos, const SparseVector& v) const;
    [[nodiscard]] SparseTensor scaled(const CycScalar& c) const;

    friend SparseTensor operator+(const SparseTensor& a, const SparseTensor& b);
    friend SparseTensor operator-(const SparseTensor& a, const SparseTensor& b);
    friend bool operator==(const SparseTensor& a, const SparseTensor& b);
    friend bool operator!=(const SparseTensor& a, const SparseTensor& b) { return !(a == b); }

    /// Human-readable dump using optional basis labels.
    [[nodiscard]] std::string str(const std::vector<std::string>* labels = nullptr) const;

private:
    friend class TensorBuilder;
    void compute_strides();

    std::vector<int> dims_;
    std::vector<Key> strides_;
    std::vector<Entry> entries_;
};

}  // namespace kup
