#pragma once

#include <momentpoly/numeric.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace momentpoly {

/// Sign plus natural-log magnitude. Carrier for quantities that overflow
/// any fixed-width float (c_r(7) already reaches ~7.2e41). Multiplication
/// adds log magnitudes; addition of same-sign values goes through
/// log-sum-exp and never overflows.
struct LogValue {
    int sign = 0;          // -1, 0, +1
    double logmag = -std::numeric_limits<double>::infinity();  // ignored when sign == 0

    static LogValue zero() { return {}; }
    static LogValue one() { return {1, 0.0}; }

    static LogValue from_log(double log_magnitude, int sign = 1) {
        return sign == 0 ? zero() : LogValue{sign, log_magnitude};
    }

    static LogValue from_double(double x) {
        if (x == 0.0) return zero();
        return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
    }

    static LogValue from_bigint(const BigInt& n) {
        int s = mpz_sgn(n.get_mpz_t());
        return s == 0 ? zero() : LogValue{s, log_abs(n)};
    }

    static LogValue from_bigrat(const BigRat& q) {
        int s = mpq_sgn(q.get_mpq_t());
        return s == 0 ? zero() : LogValue{s, log_abs(q)};
    }

    /// exp(logmag) with sign; overflows to +-inf when out of double range.
    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(logmag); }

    LogValue operator*(const LogValue& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {sign * o.sign, logmag + o.logmag};
    }

    LogValue operator/(const LogValue& o) const {
        if (o.sign == 0) throw std::domain_error("LogValue division by zero");
        if (sign == 0) return zero();
        return {sign * o.sign, logmag - o.logmag};
    }

    LogValue operator-() const { return {-sign, logmag}; }

    LogValue operator+(const LogValue& o) const {
        if (sign == 0) return o;
        if (o.sign == 0) return *this;
        const double hi = std::max(logmag, o.logmag);
        const double lo = std::min(logmag, o.logmag);
        if (sign == o.sign)  // log-sum-exp on the larger magnitude
            return {sign, hi + std::log1p(std::exp(lo - hi))};
        if (logmag == o.logmag) return zero();
        const double mag = hi + std::log1p(-std::exp(lo - hi));
        return {logmag > o.logmag ? sign : o.sign, mag};
    }

    LogValue operator-(const LogValue& o) const { return *this + (-o); }
};

/// exact/estimate as a plain double; both sides must be nonzero.
inline double ratio(const LogValue& exact, const LogValue& estimate) {
    if (exact.sign == 0 || estimate.sign == 0)
        throw std::domain_error("ratio of zero LogValue");
    return (exact.sign * estimate.sign) * std::exp(exact.logmag - estimate.logmag);
}

}  // namespace momentpoly
