#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qgain/qmatrix.hpp"

namespace qgain {

/// Minimal dense complex matrix, just enough for the adjoint oracle.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::complex<double>> entries; // row-major

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    std::complex<double>& operator()(std::size_t r, std::size_t c) {
        return entries[r * cols + c];
    }
    const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
        return entries[r * cols + c];
    }

    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix conjugate_transpose() const;

    static double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
};

/// Complex adjoint of a quaternion matrix: writing A = A0 + A1 j with
/// complex blocks (complex = span of 1 and i), returns the 2n x 2m block
/// matrix [[A0, A1], [-conj(A1), conj(A0)]].
///
/// The map is an algebra homomorphism — chi(AB) = chi(A) chi(B) and
/// chi(A*) = chi(A)^H — which makes det(chi(A)) an independent oracle:
/// for Hermitian A it equals det(A)^2.
ComplexMatrix complex_adjoint(const QMatrix& a);

/// Determinant by partial-pivot Gaussian elimination over complex doubles.
/// Deliberately independent of the permutation-sum machinery it checks.
std::complex<double> complex_det_lu(ComplexMatrix m);

} // namespace qgain
