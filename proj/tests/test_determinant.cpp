#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "qgain/determinant.hpp"
#include "qgain/errors.hpp"
#include "qgain/gain_graph.hpp"
#include "qgain/random.hpp"
#include "support/fixtures.hpp"

using namespace qgain;
using namespace qgain::testing;

namespace {

bool qnear(const Quaternion& a, const Quaternion& b, double tol = 1e-9) {
    return norm(a - b) <= tol;
}

/// Definition-level oracle: the full 3x3 expansion with every factor order
/// written out by hand from the canonical cycle arrangements.
///   rdet_1 = a11a22a33 - a12a21a33 - a13a31a22 - a11a23a32
///          + a12a23a31 + a13a32a21
Quaternion rdet1_3x3_by_hand(const QMatrix& a) {
    return a(0, 0) * a(1, 1) * a(2, 2) - a(0, 1) * a(1, 0) * a(2, 2) -
           a(0, 2) * a(2, 0) * a(1, 1) - a(0, 0) * a(1, 2) * a(2, 1) +
           a(0, 1) * a(1, 2) * a(2, 0) + a(0, 2) * a(2, 1) * a(1, 0);
}

///   cdet_1 = a33a22a11 - a33a12a21 - a22a13a31 - a23a32a11
///          + a12a23a31 + a13a32a21
Quaternion cdet1_3x3_by_hand(const QMatrix& a) {
    return a(2, 2) * a(1, 1) * a(0, 0) - a(2, 2) * a(0, 1) * a(1, 0) -
           a(1, 1) * a(0, 2) * a(2, 0) - a(1, 2) * a(2, 1) * a(0, 0) +
           a(0, 1) * a(1, 2) * a(2, 0) + a(0, 2) * a(2, 1) * a(1, 0);
}

std::string arrangement_key(const CycleArrangement& arr) {
    std::ostringstream os;
    for (const auto& cycle : arr.cycles) {
        os << "(";
        for (std::size_t c : cycle) {
            os << c << " ";
        }
        os << ")";
    }
    return os.str();
}

} // namespace

TEST_CASE("2x2 row determinant keeps the factor order a d - b c") {
    SeededRng rng(1);
    for (int t = 0; t < 50; ++t) {
        const QMatrix m = random_matrix(rng, 2);
        CHECK(qnear(rdet(m, 0), m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)));
        CHECK(qnear(rdet(m, 1), m(1, 1) * m(0, 0) - m(1, 0) * m(0, 1)));
        CHECK(qnear(cdet(m, 0), m(1, 1) * m(0, 0) - m(0, 1) * m(1, 0)));
        CHECK(qnear(cdet(m, 1), m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1)));
    }
}

TEST_CASE("3x3 determinants match the hand-expanded arrangement sum") {
    SeededRng rng(2);
    for (int t = 0; t < 50; ++t) {
        const QMatrix m = random_matrix(rng, 3);
        CHECK(qnear(rdet(m, 0), rdet1_3x3_by_hand(m), 1e-12));
        CHECK(qnear(cdet(m, 0), cdet1_3x3_by_hand(m), 1e-12));
    }
}

TEST_CASE("identity determinants") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const QMatrix id = QMatrix::identity(n);
        CHECK(qnear(rdet(id, 0), Quaternion::one()));
        CHECK(qnear(cdet(id, 0), Quaternion::one()));
    }
}

TEST_CASE("cdet of [[2, -q], [-conj q, 2]] with unit q") {
    SeededRng rng(3);
    for (int t = 0; t < 20; ++t) {
        const Quaternion q = rng.unit_quaternion();
        const QMatrix m{{Quaternion(2), -q}, {-conj(q), Quaternion(2)}};
        // 2*2 - conj(q)*q = 4 - 1
        CHECK(qnear(cdet(m, 0), Quaternion(3)));
    }
}

TEST_CASE("row determinant of a gain cycle incidence matrix is 1 - phi") {
    SeededRng rng(4);
    for (std::size_t n = 3; n <= 7; ++n) {
        const GainGraph g = random_cycle_graph(rng, n);
        std::vector<std::size_t> closed;
        for (std::size_t v = 0; v < n; ++v) {
            closed.push_back(v);
        }
        closed.push_back(0);
        const Quaternion phi = walk_gain(g, closed);
        CHECK(qnear(rdet(incidence_matrix(g), 0), Quaternion::one() - phi));
    }
}

TEST_CASE("each permutation yields exactly one valid canonical arrangement") {
    for (std::size_t n : {3UL, 4UL, 5UL}) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0UL);
        std::set<std::string> seen;
        std::size_t count = 0;
        do {
            const CycleArrangement arr = canonical_cycle_arrangement(perm, 0);
            ++count;
            seen.insert(arrangement_key(arr));

            // structural invariants
            CHECK(arr.cycles.front().front() == 0);
            std::set<std::size_t> covered;
            for (std::size_t c = 0; c < arr.cycles.size(); ++c) {
                const auto& cycle = arr.cycles[c];
                if (c > 0) {
                    CHECK(*std::min_element(cycle.begin(), cycle.end()) == cycle.front());
                    CHECK(cycle.front() > arr.cycles[c - 1].front());
                }
                covered.insert(cycle.begin(), cycle.end());
            }
            CHECK(covered.size() == n);
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::size_t factorial = 1;
        for (std::size_t f = 2; f <= n; ++f) {
            factorial *= f;
        }
        CHECK(count == factorial);
        CHECK(seen.size() == factorial);
    }
}

TEST_CASE("fast path agrees with the arrangement-term sum") {
    SeededRng rng(5);
    const std::size_t n = 4;
    const QMatrix m = random_matrix(rng, n);
    for (std::size_t pivot = 0; pivot < n; ++pivot) {
        Quaternion row_sum, col_sum;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0UL);
        do {
            const CycleArrangement arr = canonical_cycle_arrangement(perm, pivot);
            row_sum += row_arrangement_term(m, arr);
            col_sum += col_arrangement_term(m, arr);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(qnear(rdet(m, pivot), row_sum, 1e-12));
        CHECK(qnear(cdet(m, pivot), col_sum, 1e-12));
    }
}

TEST_CASE("all row and column determinants of a Hermitian matrix coincide") {
    SeededRng rng(6);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (int t = 0; t < 5; ++t) {
            const QMatrix a = random_hermitian(rng, n);
            const Quaternion ref = rdet(a, 0);
            CHECK(imag_norm(ref) <= 1e-9);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(qnear(rdet(a, i), ref));
                CHECK(qnear(cdet(a, i), ref));
            }
        }
    }
}

TEST_CASE("conjugation duality rdet_i(A*) = conj(cdet_i(A))") {
    SeededRng rng(7);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int t = 0; t < 10; ++t) {
            const QMatrix a = random_matrix(rng, n);
            const QMatrix a_star = a.conjugate_transpose();
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(qnear(rdet(a_star, i), conj(cdet(a, i))));
            }
        }
    }
}

TEST_CASE("det_hermitian") {
    SUBCASE("diagonal real matrix") {
        QMatrix d(4, 4);
        d(0, 0) = Quaternion(2);
        d(1, 1) = Quaternion(-1);
        d(2, 2) = Quaternion(3);
        d(3, 3) = Quaternion(0.5);
        CHECK(det_hermitian(d) == doctest::Approx(-3.0).epsilon(1e-12));
    }
    SUBCASE("diamond graph Laplacian") {
        CHECK(std::abs(det_hermitian(diamond_laplacian_expected()) - diamond_det()) <= 1e-9);
        CHECK(std::abs(det_hermitian_checked(diamond_laplacian_expected()) - diamond_det()) <=
              1e-9);
    }
    SUBCASE("gain tree Laplacians vanish") {
        SeededRng rng(8);
        for (int t = 0; t < 10; ++t) {
            const GainGraph tree = random_tree(rng, 2 + t % 5);
            CHECK(std::abs(det_hermitian(laplacian(tree))) <= 1e-9);
        }
    }
    SUBCASE("rejects non-Hermitian input") {
        QMatrix m(2, 2);
        m(0, 1) = Quaternion::i();
        m(1, 0) = Quaternion::i(); // should be -i
        CHECK_THROWS_AS(det_hermitian(m), NotHermitian);
    }
    SUBCASE("size cap") {
        CHECK_THROWS_AS(det_hermitian(QMatrix::identity(5), 1e-9, 4), SizeCapExceeded);
        CHECK_THROWS_AS(rdet(QMatrix::identity(11), 0), SizeCapExceeded);
    }
    SUBCASE("pivot range") {
        CHECK_THROWS_AS(rdet(QMatrix::identity(3), 3), IndexOutOfRange);
        CHECK_THROWS_AS(cdet(QMatrix::identity(3), 7), IndexOutOfRange);
    }
    SUBCASE("non-square") {
        CHECK_THROWS_AS(rdet(QMatrix(2, 3), 0), DimensionMismatch);
    }
}

TEST_CASE("characteristic polynomial of a Hermitian matrix") {
    SeededRng rng(9);
    const QMatrix a = random_hermitian(rng, 4);
    const CharPoly p = char_poly_hermitian(a);

    SUBCASE("d_1 is the trace") {
        double trace = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            trace += a(i, i).w;
        }
        CHECK(p.coefficients.front() == doctest::Approx(trace).epsilon(1e-12));
    }
    SUBCASE("d_n is the determinant") {
        CHECK(p.coefficients.back() ==
              doctest::Approx(det_hermitian(a)).epsilon(1e-10));
    }
    SUBCASE("diamond Laplacian d_n") {
        const CharPoly lp = char_poly_hermitian(diamond_laplacian_expected());
        CHECK(std::abs(lp.coefficients.back() - diamond_det()) <= 1e-9);
    }
    SUBCASE("coefficient form matches direct evaluation of det(tI - A)") {
        for (double t : {-2.0, -0.5, 0.0, 0.75, 1.5, 3.0}) {
            QMatrix shifted = QMatrix::identity(4);
            for (std::size_t r = 0; r < 4; ++r) {
                for (std::size_t c = 0; c < 4; ++c) {
                    shifted(r, c) = Quaternion(r == c ? t : 0.0) - a(r, c);
                }
            }
            CHECK(std::abs(p(t) - det_hermitian(shifted)) <= 1e-8);
        }
    }
}

TEST_CASE("principal minor sums") {
    SUBCASE("s = n reduces to the determinant") {
        SeededRng rng(10);
        const QMatrix a = random_hermitian(rng, 4);
        CHECK(principal_minor_sum(a, 4) == doctest::Approx(det_hermitian(a)).epsilon(1e-12));
    }
    SUBCASE("H*H and HH* agree on the diamond incidence matrix") {
        const QMatrix h = incidence_matrix(diamond_graph());
        const QMatrix hh = h * h.conjugate_transpose();
        const QMatrix hsh = h.conjugate_transpose() * h;
        for (std::size_t s = 1; s <= 4; ++s) {
            CHECK(std::abs(principal_minor_sum(hh, s) - principal_minor_sum(hsh, s)) <= 1e-9);
        }
    }
    SUBCASE("s = 1 on a Laplacian sums the degrees") {
        const GainGraph g = diamond_graph();
        CHECK(principal_minor_sum(laplacian(g), 1) == doctest::Approx(10.0).epsilon(1e-12));
    }
}

TEST_CASE("invertibility criterion det(AA*) > 0") {
    CHECK(is_invertible(QMatrix::identity(3)));

    QMatrix with_zero_row(3, 3);
    with_zero_row(0, 0) = Quaternion::one();
    with_zero_row(2, 2) = Quaternion::i();
    CHECK_FALSE(is_invertible(with_zero_row));

    // incidence matrix of an unbalanced gain cycle is invertible
    SeededRng rng(11);
    const GainGraph cycle = random_cycle_graph(rng, 4);
    CHECK(is_invertible(incidence_matrix(cycle)));
}

TEST_CASE("determinantal rank") {
    CHECK(rank_determinantal(QMatrix(3, 3)) == 0);

    SeededRng rng(12);
    const GainGraph tree = random_tree(rng, 5);
    CHECK(rank_determinantal(incidence_matrix(tree)) == 4);

    CHECK(rank_determinantal(incidence_matrix(diamond_graph())) == 4);
}
