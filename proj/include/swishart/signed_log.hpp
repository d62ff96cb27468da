#pragma once

#include <cmath>
#include <limits>

namespace swishart {

// Value represented as sign * exp(log_abs). sign == 0 encodes exact zero
// (log_abs is then -inf). Used wherever series factors overflow double range.
struct SignedLog {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static SignedLog zero() { return {}; }
    static SignedLog one() { return {0.0, 1}; }

    static SignedLog from_value(double v) {
        if (v == 0.0) return zero();
        return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
    }

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    SignedLog operator*(const SignedLog& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {log_abs + o.log_abs, sign * o.sign};
    }
};

// Accumulates a sum of SignedLog terms without leaving the representable
// range: terms are added as sign * exp(log - max_log) with Neumaier
// compensation, rescaling whenever a larger magnitude arrives. Addition
// order is whatever the caller uses, so results are deterministic.
class SignedLogAccumulator {
public:
    void add(const SignedLog& t) {
        if (t.sign == 0) return;
        if (t.log_abs > max_log_) {
            const double f = (max_log_ == -std::numeric_limits<double>::infinity())
                                 ? 0.0
                                 : std::exp(max_log_ - t.log_abs);
            sum_ *= f;
            comp_ *= f;
            max_log_ = t.log_abs;
        }
        add_compensated(t.sign * std::exp(t.log_abs - max_log_));
    }

    SignedLog total() const {
        const double s = sum_ + comp_;
        if (s == 0.0 || max_log_ == -std::numeric_limits<double>::infinity())
            return SignedLog::zero();
        return {max_log_ + std::log(std::abs(s)), s > 0.0 ? 1 : -1};
    }

private:
    void add_compensated(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double max_log_ = -std::numeric_limits<double>::infinity();
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace swishart
