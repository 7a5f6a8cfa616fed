#include "qgain/complex_adjoint.hpp"

#include <algorithm>
#include <cmath>

#include "qgain/errors.hpp"

namespace qgain {

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (cols != o.rows) {
        throw DimensionMismatch("ComplexMatrix multiplication");
    }
    ComplexMatrix out(rows, o.cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < cols; ++k) {
            const auto lhs = (*this)(r, k);
            if (lhs == std::complex<double>{}) {
                continue;
            }
            for (std::size_t c = 0; c < o.cols; ++c) {
                out(r, c) += lhs * o(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate_transpose() const {
    ComplexMatrix out(cols, rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw DimensionMismatch("ComplexMatrix::max_abs_diff");
    }
    double dev = 0.0;
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
        dev = std::max(dev, std::abs(a.entries[k] - b.entries[k]));
    }
    return dev;
}

ComplexMatrix complex_adjoint(const QMatrix& a) {
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    ComplexMatrix out(2 * n, 2 * m);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            const Quaternion& q = a(r, c);
            const std::complex<double> a0(q.w, q.x);
            const std::complex<double> a1(q.y, q.z);
            out(r, c) = a0;
            out(r, m + c) = a1;
            out(n + r, c) = -std::conj(a1);
            out(n + r, m + c) = std::conj(a0);
        }
    }
    return out;
}

std::complex<double> complex_det_lu(ComplexMatrix m) {
    if (m.rows != m.cols) {
        throw DimensionMismatch("determinant of a non-square complex matrix");
    }
    const std::size_t n = m.rows;
    std::complex<double> det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double cand = std::abs(m(r, col));
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best == 0.0) {
            return {0.0, 0.0};
        }
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) {
                std::swap(m(pivot, c), m(col, c));
            }
            det = -det;
        }
        const std::complex<double> diag = m(col, col);
        det *= diag;
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::complex<double> factor = m(r, col) / diag;
            if (factor == std::complex<double>{}) {
                continue;
            }
            for (std::size_t c = col + 1; c < n; ++c) {
                m(r, c) -= factor * m(col, c);
            }
            m(r, col) = {};
        }
    }
    return det;
}

} // namespace qgain
