#include "kup/tensor/linalg.hpp"

#include <algorithm>

#include "kup/error.hpp"

namespace kup {

namespace {

std::vector<std::vector<CycScalar>> nullspace_from_rref(const std::vector<std::vector<CycScalar>>& rows,
                                                       const std::vector<int>& pivots, int cols) {
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CycScalar>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<CycScalar> v(cols);
        v[free] = CycScalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        // Normalize: first nonzero coefficient equals 1.
        auto it = std::find_if(v.begin(), v.end(), [](const CycScalar& c) { return !c.is_zero(); });
        CycScalar inv = it->inverse();
        for (auto& c : v) c *= inv;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = CycScalar(1);
    return m;
}

Matrix Matrix::from_map(const LinearMap& m) {
    Matrix a(m.dim(), m.dim());
    for (int j = 0; j < m.dim(); ++j)
        for (const auto& [i, c] : m.col(j).entries()) a(i, j) = c;
    return a;
}

LinearMap Matrix::to_map() const {
    if (rows_ != cols_) fail(Errc::DimensionMismatch, "to_map on a non-square matrix");
    LinearMap m(rows_);
    for (int j = 0; j < cols_; ++j)
        for (int i = 0; i < rows_; ++i)
            if (!(*this)(i, j).is_zero()) m.col(j).add(i, (*this)(i, j));
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycScalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j).add_product(a, o(k, j));
        }
    return r;
}

std::vector<int> Matrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = r;
        while (p < rows_ && (*this)(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
        CycScalar inv = (*this)(r, c).inverse();
        for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || (*this)(i, c).is_zero()) continue;
            CycScalar f = (*this)(i, c);
            for (int j = c; j < cols_; ++j)
                if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
}

std::vector<std::vector<CycScalar>> Matrix::nullspace() const {
    Matrix m = *this;
    std::vector<int> piv = m.rref();
    std::vector<std::vector<CycScalar>> rows(piv.size(), std::vector<CycScalar>(cols_));
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < cols_; ++j) rows[r][j] = m(static_cast<int>(r), j);
    return nullspace_from_rref(rows, piv, cols_);
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) fail(Errc::DimensionMismatch, "inverse of a non-square matrix");
    const int n = rows_;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = CycScalar(1);
    }
    std::vector<int> piv = aug.rref();
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<std::vector<CycScalar>> Matrix::solve(const std::vector<CycScalar>& b) const {
    if (static_cast<int>(b.size()) != rows_) fail(Errc::DimensionMismatch, "right-hand side has wrong length");
    Matrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    std::vector<int> piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<CycScalar> x(cols_);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), cols_);
    return x;
}

bool IncrementalEchelon::add_row(std::vector<CycScalar> row) {
    if (static_cast<int>(row.size()) != cols_) fail(Errc::DimensionMismatch, "row has wrong length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const CycScalar f = row[pivots_[r]];
        if (f.is_zero()) continue;
        for (int j = 0; j < cols_; ++j)
            if (!rows_[r][j].is_zero()) row[j] -= f * rows_[r][j];
    }
    auto it = std::find_if(row.begin(), row.end(), [](const CycScalar& c) { return !c.is_zero(); });
    if (it == row.end()) return false;
    const int p = static_cast<int>(it - row.begin());
    CycScalar inv = it->inverse();
    for (auto& c : row) c *= inv;
    // Keep the basis fully reduced so the nullspace can be read off directly.
    for (auto& other : rows_) {
        const CycScalar f = other[p];
        if (f.is_zero()) continue;
        for (int j = 0; j < cols_; ++j)
            if (!row[j].is_zero()) other[j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

std::vector<std::vector<CycScalar>> IncrementalEchelon::nullspace() const {
    return nullspace_from_rref(rows_, pivots_, cols_);
}

}  // namespace kup
