#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "qgain/quaternion.hpp"
#include "qgain/random.hpp"

using namespace qgain;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool qnear(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
    return norm(a - b) <= tol;
}
} // namespace

TEST_CASE("defining relations of the Hamilton product") {
    CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
    CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
    CHECK(Quaternion::j() * Quaternion::k() == Quaternion::i());
    CHECK(Quaternion::k() * Quaternion::i() == Quaternion::j());
    CHECK(Quaternion::i() * Quaternion::i() == -Quaternion::one());
    CHECK(Quaternion::j() * Quaternion::j() == -Quaternion::one());
    CHECK(Quaternion::k() * Quaternion::k() == -Quaternion::one());
}

TEST_CASE("four-factor gain product") {
    // i * (i+k)/sqrt2 * k * (i+j)/sqrt2 = 0.5 + 0.5i - 0.5j - 0.5k
    const Quaternion a = Quaternion::i();
    const Quaternion b(0, kInvSqrt2, 0, kInvSqrt2);
    const Quaternion c = Quaternion::k();
    const Quaternion d(0, kInvSqrt2, kInvSqrt2, 0);
    CHECK(qnear(a * b * c * d, Quaternion(0.5, 0.5, -0.5, -0.5)));
}

TEST_CASE("conjugation") {
    CHECK(conj(Quaternion(1, 1, 0, 0)) == Quaternion(1, -1, 0, 0));
    const Quaternion g(0, kInvSqrt2, kInvSqrt2, 0);
    CHECK(qnear(conj(g), -g));

    SeededRng rng(7);
    for (int t = 0; t < 100; ++t) {
        const Quaternion q = rng.quaternion(2.0);
        CHECK(conj(conj(q)) == q);
    }
}

TEST_CASE("conjugation is an exact anti-homomorphism") {
    SeededRng rng(11);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = rng.quaternion(3.0);
        const Quaternion b = rng.quaternion(3.0);
        CHECK(conj(a * b) == conj(b) * conj(a));
    }
}

TEST_CASE("inverse") {
    CHECK(qnear(inverse(Quaternion(2)), Quaternion(0.5)));
    CHECK(qnear(inverse(Quaternion::i()), -Quaternion::i()));

    const Quaternion g(0, kInvSqrt2, kInvSqrt2, 0);
    CHECK(qnear(inverse(g), -g));
    CHECK(qnear(g * inverse(g), Quaternion::one()));

    CHECK_THROWS_AS(inverse(Quaternion::zero()), ZeroDivisor);
    CHECK_THROWS_AS(inverse(Quaternion(1e-12, 0, 0, 0)), ZeroDivisor);
}

TEST_CASE("norm and unit test") {
    CHECK(norm(Quaternion(1, 1, 1, 1)) == doctest::Approx(2.0));
    CHECK(is_unit(Quaternion(0, kInvSqrt2, 0, kInvSqrt2), 1e-9));
    CHECK_FALSE(is_unit(Quaternion(0.5, 0.5, 0, 0), 1e-9));
}

TEST_CASE("similarity classes") {
    CHECK(similar(Quaternion::i(), Quaternion::j()));
    CHECK_FALSE(similar(Quaternion::one(), -Quaternion::one()));

    SeededRng rng(3);
    for (int t = 0; t < 100; ++t) {
        const Quaternion q = rng.quaternion(2.0);
        const Quaternion u = rng.unit_quaternion();
        CHECK(similar(q, inverse(u) * q * u, 1e-9));
    }
}

TEST_CASE("multiplication properties on random input") {
    SeededRng rng(5);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = rng.unit_quaternion();
        const Quaternion b = rng.unit_quaternion();
        const Quaternion c = rng.unit_quaternion();

        CHECK(norm((a * b) * c - a * (b * c)) <= 1e-12);
        CHECK(std::abs(norm(a * b) - norm(a) * norm(b)) <= 1e-12);
        CHECK(norm(a * conj(a) - Quaternion(norm_sq(a))) <= 1e-12);
        CHECK(norm(conj(a) * a - Quaternion(norm_sq(a))) <= 1e-12);
    }
}

TEST_CASE("constructors reject non-finite components") {
    CHECK_THROWS_AS(Quaternion(std::nan(""), 0, 0, 0), NonFiniteValue);
    CHECK_THROWS_AS(Quaternion(0, std::numeric_limits<double>::infinity(), 0, 0),
                    NonFiniteValue);
    CHECK_THROWS_AS(Quaternion(0, 0, -std::numeric_limits<double>::infinity(), 0),
                    NonFiniteValue);
}
