// Checks of the complex-adjoint determinant oracle, including an
// eigenvalue-based cross-check of the characteristic polynomial through an
// independent eigensolver (Eigen).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "qgain/complex_adjoint.hpp"
#include "qgain/determinant.hpp"
#include "qgain/gain_graph.hpp"
#include "qgain/random.hpp"
#include "support/fixtures.hpp"

using namespace qgain;
using namespace qgain::testing;

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd out(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return out;
}

} // namespace

TEST_CASE("adjoint of identity and of j") {
    const ComplexMatrix id2 = complex_adjoint(QMatrix::identity(3));
    for (std::size_t r = 0; r < 6; ++r) {
        for (std::size_t c = 0; c < 6; ++c) {
            CHECK(std::abs(id2(r, c) - std::complex<double>(r == c ? 1.0 : 0.0)) == 0.0);
        }
    }

    QMatrix j(1, 1);
    j(0, 0) = Quaternion::j();
    const ComplexMatrix chi = complex_adjoint(j);
    CHECK(chi(0, 0) == std::complex<double>(0, 0));
    CHECK(chi(0, 1) == std::complex<double>(1, 0));
    CHECK(chi(1, 0) == std::complex<double>(-1, 0));
    CHECK(chi(1, 1) == std::complex<double>(0, 0));
}

TEST_CASE("the adjoint is an algebra homomorphism") {
    SeededRng rng(21);
    for (int t = 0; t < 20; ++t) {
        const QMatrix a = random_rectangular(rng, 3, 4);
        const QMatrix b = random_rectangular(rng, 4, 2);
        CHECK(ComplexMatrix::max_abs_diff(complex_adjoint(a * b),
                                          complex_adjoint(a) * complex_adjoint(b)) <= 1e-12);
        CHECK(ComplexMatrix::max_abs_diff(complex_adjoint(a.conjugate_transpose()),
                                          complex_adjoint(a).conjugate_transpose()) == 0.0);
    }
}

TEST_CASE("det of the adjoint is the squared Hermitian determinant") {
    SeededRng rng(22);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (int t = 0; t < 5; ++t) {
            const QMatrix a = random_hermitian(rng, n);
            const std::complex<double> chi_det = complex_det_lu(complex_adjoint(a));
            const double det = det_hermitian(a);
            CHECK(std::abs(chi_det.imag()) <= 1e-6 * std::max(1.0, std::abs(chi_det.real())));
            CHECK(std::abs(chi_det.real() - det * det) <=
                  1e-6 * std::max(1.0, std::abs(det * det)));
        }
    }
}

TEST_CASE("diamond Laplacian oracle value") {
    const GainGraph g = diamond_graph();
    const std::complex<double> chi_det = complex_det_lu(complex_adjoint(laplacian(g)));
    const double expected = diamond_det() * diamond_det(); // about 11.1766
    CHECK(std::abs(chi_det.real() - expected) <= 1e-6);
}

TEST_CASE("positive semi-definiteness of B B*") {
    SeededRng rng(23);
    for (int t = 0; t < 40; ++t) {
        const QMatrix b = random_rectangular(rng, 2 + t % 3, 1 + t % 4);
        CHECK(det_hermitian(b * b.conjugate_transpose()) >= -1e-9);
    }
}

TEST_CASE("characteristic polynomial vanishes at the adjoint eigenvalues") {
    SeededRng rng(24);
    for (std::size_t n = 2; n <= 4; ++n) {
        const QMatrix a = random_hermitian(rng, n);
        const CharPoly p = char_poly_hermitian(a);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(complex_adjoint(a)));
        REQUIRE(solver.info() == Eigen::Success);
        for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
            CHECK(std::abs(p(solver.eigenvalues()[k])) <= 1e-6);
        }
    }
}
