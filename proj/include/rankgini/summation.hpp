#pragma once

#include <cmath>

namespace rankgini {

/// Neumaier's variant of Kahan summation. The running compensation also
/// covers the case where the incoming term is larger than the partial sum.
class CompensatedSum {
public:
    constexpr CompensatedSum() = default;
    constexpr explicit CompensatedSum(double initial) : sum_(initial) {}

    CompensatedSum& operator+=(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    constexpr double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace rankgini
