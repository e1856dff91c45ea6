#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace momentpoly {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// num/den reduced to canonical form (gcd 1, positive denominator).
inline BigRat make_rational(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rational(long num, long den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Natural log of |n|; -inf for n == 0. Exact to double rounding even when
/// n far exceeds double range.
inline double log_abs(const BigInt& n) {
    if (mpz_sgn(n.get_mpz_t()) == 0) return -std::numeric_limits<double>::infinity();
    signed long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(exp2) * M_LN2;
}

inline double log_abs(const BigRat& q) {
    return log_abs(BigInt(q.get_num())) - log_abs(BigInt(q.get_den()));
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// "num/den" when den != 1, plain "num" otherwise.
inline std::string to_string(const BigRat& q) { return q.get_str(); }

}  // namespace momentpoly
