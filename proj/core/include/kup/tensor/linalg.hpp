/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over CycScalar: row reduction, nullspaces, inverses.
 */
#pragma once

#include <optional>
#include <vector>

#include "kup/scalar/cyclotomic.hpp"
#include "kup/tensor/sparse.hpp"

namespace kup {

/// Row-major dense matrix with exact entries.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static Matrix identity(int n);
    static Matrix from_map(const LinearMap& m);

    [[nodiscard]] int rows() const noexcept { return rows_; }
    [[nodiscard]] int cols() const noexcept { return cols_; }
    CycScalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const CycScalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    [[nodiscard]] LinearMap to_map() const;  // requires square
    [[nodiscard]] Matrix operator*(const Matrix& o) const;

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref();
    [[nodiscard]] int rank() const;
    /// Basis of {x : A x = 0}, each vector normalized so its first nonzero entry is 1.
    [[nodiscard]] std::vector<std::vector<CycScalar>> nullspace() const;
    [[nodiscard]] std::optional<Matrix> inverse() const;
    /// Some solution of A x = b, if any.
    [[nodiscard]] std::optional<std::vector<CycScalar>> solve(const std::vector<CycScalar>& b) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<CycScalar> a_;
};

/// Incremental row reduction: rows are added one at a time and reduced against
/// the current echelon basis, so a solver can stop as soon as a target rank is reached.
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(int cols) : cols_(cols) {}
    /// Returns true if the row increased the rank.
    bool add_row(std::vector<CycScalar> row);
    [[nodiscard]] int rank() const noexcept { return static_cast<int>(rows_.size()); }
    /// Nullspace of the accumulated rows, first nonzero coefficient normalized to 1.
    [[nodiscard]] std::vector<std::vector<CycScalar>> nullspace() const;

private:
    int cols_;
    std::vector<std::vector<CycScalar>> rows_;  // each normalized with pivot 1
    std::vector<int> pivots_;
};

}  // namespace kup
