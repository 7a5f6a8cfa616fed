#include "qgain/qmatrix.hpp"

#include <algorithm>
#include <limits>

#include "qgain/errors.hpp"

namespace qgain {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionMismatch("ragged initializer for QMatrix");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Quaternion::one();
    }
    return m;
}

Quaternion& QMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) {
        throw IndexOutOfRange("QMatrix::at");
    }
    return entries_[r * cols_ + c];
}

const Quaternion& QMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw IndexOutOfRange("QMatrix::at");
    }
    return entries_[r * cols_ + c];
}

QMatrix QMatrix::conjugate_transpose() const {
    QMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = conj((*this)(r, c));
        }
    }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionMismatch("QMatrix addition");
    }
    QMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] + o.entries_[k];
    }
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionMismatch("QMatrix subtraction");
    }
    QMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] - o.entries_[k];
    }
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) {
        throw DimensionMismatch("QMatrix multiplication");
    }
    QMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Quaternion& lhs = (*this)(r, k);
            if (lhs == Quaternion::zero()) {
                continue;
            }
            for (std::size_t c = 0; c < o.cols_; ++c) {
                out(r, c) += lhs * o(k, c);
            }
        }
    }
    return out;
}

QMatrix QMatrix::submatrix(std::span<const std::size_t> row_idx,
                           std::span<const std::size_t> col_idx) const {
    QMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
        if (row_idx[r] >= rows_) {
            throw IndexOutOfRange("QMatrix::submatrix row index");
        }
        for (std::size_t c = 0; c < col_idx.size(); ++c) {
            if (col_idx[c] >= cols_) {
                throw IndexOutOfRange("QMatrix::submatrix column index");
            }
            out(r, c) = (*this)(row_idx[r], col_idx[c]);
        }
    }
    return out;
}

double QMatrix::hermitian_deviation() const {
    if (!is_square()) {
        return std::numeric_limits<double>::infinity();
    }
    double dev = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            const Quaternion d = (*this)(r, c) - conj((*this)(c, r));
            dev = std::max({dev, std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)});
        }
    }
    return dev;
}

double QMatrix::max_abs_diff(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("QMatrix::max_abs_diff");
    }
    double dev = 0.0;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        dev = std::max(dev, norm(a.entries_[k] - b.entries_[k]));
    }
    return dev;
}

} // namespace qgain
