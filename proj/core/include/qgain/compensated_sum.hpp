#pragma once

#include <cmath>

#include "qgain/quaternion.hpp"

namespace qgain {

/// Neumaier compensated accumulator. Keeps long alternating sums
/// deterministic and accurate regardless of term count.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Componentwise compensated sum of quaternions.
class QuaternionSum {
public:
    void add(const Quaternion& q) {
        w_.add(q.w);
        x_.add(q.x);
        y_.add(q.y);
        z_.add(q.z);
    }

    Quaternion value() const { return Quaternion(w_.value(), x_.value(), y_.value(), z_.value()); }

private:
    CompensatedSum w_, x_, y_, z_;
};

} // namespace qgain
