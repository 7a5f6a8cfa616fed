#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qgain/quaternion.hpp"

namespace qgain {

/// Dense row-major matrix over the quaternions.
class QMatrix {
public:
    QMatrix() = default;

    /// rows x cols matrix filled with zeros.
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Row-wise construction, convenient in tests:
    ///   QMatrix m{{a, b}, {c, d}};
    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    /// Unchecked access.
    Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    /// Bounds-checked access; throws IndexOutOfRange.
    Quaternion& at(std::size_t r, std::size_t c);
    const Quaternion& at(std::size_t r, std::size_t c) const;

    std::span<const Quaternion> entries() const { return entries_; }

    QMatrix conjugate_transpose() const;

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;

    /// Submatrix with the given row and column index selections (in order).
    QMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;

    /// Principal submatrix: same index set for rows and columns.
    QMatrix principal_submatrix(std::span<const std::size_t> idx) const {
        return submatrix(idx, idx);
    }

    /// Max componentwise deviation of A - A*; zero for exactly Hermitian input.
    double hermitian_deviation() const;
    bool is_hermitian(double tol = kDefaultTol) const { return hermitian_deviation() <= tol; }

    /// Max quaternion norm over entries of A - B.
    static double max_abs_diff(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> entries_;
};

} // namespace qgain
