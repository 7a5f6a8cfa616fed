#pragma once

#include <cmath>
#include <string>

#include "qgain/errors.hpp"

namespace qgain {

/// Default absolute tolerance for unit, equality and realness checks.
/// Products of a few dozen unit quaternions stay far below this.
inline constexpr double kDefaultTol = 1e-9;

/// A quaternion q = w + x i + y j + z k over double-precision reals.
///
/// Values are immutable in spirit: every operation returns a fresh value.
/// Constructors reject NaN and infinite components so that the long
/// alternating sums in the determinant code cannot be silently corrupted.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;

    Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {
        if (!std::isfinite(w) || !std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            throw NonFiniteValue("quaternion component is NaN or infinite");
        }
    }

    /// Real quaternion w + 0i + 0j + 0k.
    explicit Quaternion(double real) : Quaternion(real, 0.0, 0.0, 0.0) {}

    static Quaternion zero() { return {}; }
    static Quaternion one() { return Quaternion(1.0, 0.0, 0.0, 0.0); }
    static Quaternion i() { return Quaternion(0.0, 1.0, 0.0, 0.0); }
    static Quaternion j() { return Quaternion(0.0, 0.0, 1.0, 0.0); }
    static Quaternion k() { return Quaternion(0.0, 0.0, 0.0, 1.0); }

    bool operator==(const Quaternion&) const = default;

    Quaternion operator-() const { return Quaternion(-w, -x, -y, -z); }

    Quaternion operator+(const Quaternion& o) const {
        return Quaternion(w + o.w, x + o.x, y + o.y, z + o.z);
    }

    Quaternion operator-(const Quaternion& o) const {
        return Quaternion(w - o.w, x - o.x, y - o.y, z - o.z);
    }

    /// Hamilton product under i^2 = j^2 = k^2 = ijk = -1. Noncommutative.
    /// The pairwise association makes conj(a*b) == conj(b)*conj(a) hold
    /// bitwise, not just within tolerance.
    Quaternion operator*(const Quaternion& o) const {
        return Quaternion((w * o.w - x * o.x) + (-y * o.y - z * o.z),
                          (w * o.x + x * o.w) + (y * o.z - z * o.y),
                          (w * o.y + y * o.w) + (z * o.x - x * o.z),
                          (w * o.z + z * o.w) + (x * o.y - y * o.x));
    }

    Quaternion operator*(double s) const { return Quaternion(w * s, x * s, y * s, z * s); }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Conjugate w - xi - yj - zk; conj(ab) = conj(b) conj(a).
inline Quaternion conj(const Quaternion& q) { return Quaternion(q.w, -q.x, -q.y, -q.z); }

inline double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

/// Modulus |q| = sqrt(w^2 + x^2 + y^2 + z^2).
inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Norm of the imaginary part; the "imaginary residue" of values that
/// should be real.
inline double imag_norm(const Quaternion& q) {
    return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

/// q^-1 = conj(q) / |q|^2. Throws ZeroDivisor when |q| <= tol.
inline Quaternion inverse(const Quaternion& q, double tol = kDefaultTol) {
    const double n2 = norm_sq(q);
    if (std::sqrt(n2) <= tol) {
        throw ZeroDivisor("quaternion inverse: norm below tolerance");
    }
    return conj(q) * (1.0 / n2);
}

inline bool is_unit(const Quaternion& q, double tol = kDefaultTol) {
    return std::abs(norm(q) - 1.0) <= tol;
}

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = kDefaultTol) {
    return norm(a - b) <= tol;
}

inline bool is_zero(const Quaternion& q, double tol = kDefaultTol) { return norm(q) <= tol; }

/// Similarity-class test: x ~ y iff u^-1 x u = y for some nonzero u,
/// equivalently equal real parts and equal imaginary-part moduli.
inline bool similar(const Quaternion& a, const Quaternion& b, double tol = kDefaultTol) {
    return std::abs(a.w - b.w) <= tol && std::abs(imag_norm(a) - imag_norm(b)) <= tol;
}

/// q scaled to unit norm. Throws ZeroDivisor for (near-)zero input.
inline Quaternion normalized(const Quaternion& q, double tol = kDefaultTol) {
    const double n = norm(q);
    if (n <= tol) {
        throw ZeroDivisor("cannot normalize a near-zero quaternion");
    }
    return q * (1.0 / n);
}

/// Human-readable form like "0.5+0.5i-0.5j-0.5k".
std::string to_string(const Quaternion& q);

} // namespace qgain
