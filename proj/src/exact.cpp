#include <momentpoly/exact.hpp>

#include "poly_mul.hpp"

#include <mutex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace momentpoly {

BigInt power_sum(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("power_sum requires n >= 1, k >= 1");
    MomentMultiset ms(k);
    BigInt acc(0);
    BigInt term;
    for (long j = 1; j <= 2L * k - 1; ++j) {
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(n));
        acc += term * ms.multiplicity(j);
    }
    return acc;
}

const RationalPolynomial& bernoulli_polynomial(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli_polynomial requires m >= 0");
    static std::vector<RationalPolynomial> cache;
    static std::vector<BigRat> numbers;  // B_i(0)
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= m) {
        int i = static_cast<int>(cache.size());
        if (i == 0) {
            numbers.push_back(BigRat(1));
        } else {
            // sum_{t=0}^{i-1} C(i+1, t) B_t = 0 for i >= 1
            BigRat s(0);
            for (int t = 0; t < i; ++t) s += BigRat(binomial(i + 1, t)) * numbers[t];
            numbers.push_back(-s / BigRat(binomial(i + 1, i)));
        }
        std::vector<BigRat> coeffs(i + 1, BigRat(0));
        for (int t = 0; t <= i; ++t)
            coeffs[t] = BigRat(binomial(i, t)) * numbers[i - t];  // B_i(x) = sum C(i,t) B_{i-t} x^t
        cache.emplace_back(std::move(coeffs), "x");
    }
    return cache[m];
}

const RationalPolynomial& power_sum_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("power_sum_polynomial requires n >= 1");
    static std::vector<RationalPolynomial> cache(1);  // index 0 unused
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        int i = static_cast<int>(cache.size());
        // p_i(k) = [2 B_{i+2}(k+1) - B_{i+2}(2k) - B_{i+2}(1)]/(i+2)
        //        + 2k [B_{i+1}(2k) - B_{i+1}(k+1)]/(i+1)
        const RationalPolynomial k_plus_1({BigRat(1), BigRat(1)}, "k");
        const RationalPolynomial two_k({BigRat(0), BigRat(2)}, "k");
        const RationalPolynomial& b2 = bernoulli_polynomial(i + 2);
        const RationalPolynomial& b1 = bernoulli_polynomial(i + 1);
        RationalPolynomial hi = b2.compose(k_plus_1) * BigRat(2) - b2.compose(two_k) -
                                RationalPolynomial(b2.evaluate(BigRat(1)));
        hi *= make_rational(1, i + 2);
        RationalPolynomial lo = (b1.compose(two_k) - b1.compose(k_plus_1)) * two_k;
        lo *= make_rational(1, i + 1);
        RationalPolynomial p = hi + lo;
        p.set_var("k");
        cache.push_back(std::move(p));
    }
    return cache[n];
}

BigInt power_sum_closed(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("power_sum_closed requires n >= 1, k >= 1");
    BigRat v = power_sum_polynomial(n).evaluate(BigRat(k));
    if (v.get_den() != 1) throw IntegralityViolation("power sum evaluated to a non-integer");
    return v.get_num();
}

BigRat leading_coefficient(int k) {
    if (k < 1) throw std::invalid_argument("leading_coefficient requires k >= 1");
    BigInt num(1), den(1);
    for (int j = 0; j < k; ++j) {
        num *= factorial(j);
        den *= factorial(j + k);
    }
    return make_rational(num, den);
}

const BigInt& CoefficientTable::b_at(long r) const {
    if (r < 0 || r >= static_cast<long>(b.size()))
        throw IndexOutOfRange("coefficient index outside 0..k^2");
    return b[static_cast<size_t>(r)];
}

BigRat CoefficientTable::coefficient(long r) const { return c0 * BigRat(b_at(r)); }

BigRat CoefficientTable::evaluate(const BigRat& N) const {
    BigRat acc(0);
    for (const auto& br : b) acc = acc * N + BigRat(br);
    return c0 * acc;
}

std::vector<long> CoefficientTable::argmax() const {
    std::vector<long> out;
    const BigInt* best = nullptr;
    for (size_t r = 0; r < b.size(); ++r) {
        if (!best || b[r] > *best) {
            best = &b[r];
            out.assign(1, static_cast<long>(r));
        } else if (b[r] == *best) {
            out.push_back(static_cast<long>(r));
        }
    }
    return out;
}

CoefficientTable::Peak CoefficientTable::unimodality_peak() const {
    size_t i = 0;
    while (i + 1 < b.size() && b[i + 1] >= b[i]) ++i;
    size_t peak = i;
    while (i + 1 < b.size() && b[i + 1] <= b[i]) ++i;
    return {i + 1 == b.size(), static_cast<long>(peak)};
}

namespace {

/// Shared table assembly: validate b_0 and attach c_0.
CoefficientTable finish_table(int k, std::vector<BigInt> b) {
    CoefficientTable t;
    t.k = k;
    t.c0 = leading_coefficient(k);
    t.b = std::move(b);
    if (t.b.empty() || t.b.front() != 1)
        throw IntegralityViolation("table is missing b_0 = 1");
    return t;
}

std::vector<BigInt> newton_run(int k, long rmax) {
    std::vector<BigInt> b;
    b.reserve(rmax + 1);
    b.emplace_back(1);
    std::vector<BigInt> p;  // p[n-1] = p_n(k)
    p.reserve(rmax);
    for (long n = 1; n <= rmax; ++n) p.push_back(power_sum_closed(static_cast<int>(n), k));
    for (long r = 1; r <= rmax; ++r) {
        BigInt s(0);
        for (long n = 1; n <= r; ++n) {
            if (n % 2 == 1)
                mpz_addmul(s.get_mpz_t(), p[n - 1].get_mpz_t(), b[r - n].get_mpz_t());
            else
                mpz_submul(s.get_mpz_t(), p[n - 1].get_mpz_t(), b[r - n].get_mpz_t());
        }
        BigRat br = make_rational(s, BigInt(r));
        if (br.get_den() != 1) {
            std::ostringstream msg;
            msg << "newton recursion produced non-integer b_" << r << " for k=" << k;
            throw IntegralityViolation(msg.str());
        }
        b.push_back(br.get_num());
    }
    return b;
}

}  // namespace

std::vector<BigInt> newton_prefix(int k, int rmax) {
    if (k < 1 || rmax < 0) throw std::invalid_argument("newton_prefix requires k >= 1, rmax >= 0");
    long cap = std::min<long>(rmax, static_cast<long>(k) * k);
    auto b = newton_run(k, cap);
    b.resize(rmax + 1, BigInt(0));  // b_r = 0 beyond degree
    return b;
}

CoefficientTable newton_coefficients(int k) {
    if (k < 1) throw std::invalid_argument("newton_coefficients requires k >= 1");
    return finish_table(k, newton_run(k, static_cast<long>(k) * k));
}

namespace {

using detail::IntPoly;

/// (x + j)^m by the binomial theorem.
IntPoly linear_factor_power(long j, long m) {
    IntPoly out(m + 1);
    for (long i = 0; i <= m; ++i)
        out[i] = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i)) *
                 pow_int(BigInt(j), static_cast<unsigned long>(m - i));
    return out;
}

std::vector<BigInt> table_from_poly(int k, const IntPoly& poly) {
    const long n = static_cast<long>(k) * k;
    std::vector<BigInt> b(n + 1);
    for (long r = 0; r <= n; ++r) b[r] = poly[n - r];  // b_r multiplies x^{k^2-r}
    return b;
}

}  // namespace

CoefficientTable expand_product(int k) {
    if (k < 1) throw std::invalid_argument("expand_product requires k >= 1");
    MomentMultiset ms(k);
    std::vector<IntPoly> level;
    level.reserve(2 * k - 1);
    for (long j = 1; j <= ms.largest(); ++j)
        level.push_back(linear_factor_power(j, ms.multiplicity(j)));

    // Balanced pairwise reduction; the merge order is fixed, so the result
    // does not depend on scheduling.
    while (level.size() > 1) {
        const size_t pairs = level.size() / 2;
        std::vector<IntPoly> next(pairs + level.size() % 2);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (size_t i = 0; i < pairs; ++i)
            next[i] = detail::poly_mul(level[2 * i], level[2 * i + 1]);
        if (level.size() % 2) next.back() = std::move(level.back());
        level = std::move(next);
    }
    return finish_table(k, table_from_poly(k, level.front()));
}

CoefficientTable expand_product_serial(int k) {
    if (k < 1) throw std::invalid_argument("expand_product_serial requires k >= 1");
    MomentMultiset ms(k);
    IntPoly poly{BigInt(1)};
    for (long j = 1; j <= ms.largest(); ++j) {
        for (long t = 0; t < ms.multiplicity(j); ++t) {
            IntPoly out(poly.size() + 1);
            out[poly.size()] = poly.back();
            for (size_t i = poly.size(); i-- > 0;) {
                out[i] = poly[i] * j;
                if (i > 0) out[i] += poly[i - 1];
            }
            poly = std::move(out);
        }
    }
    return finish_table(k, table_from_poly(k, poly));
}

}  // namespace momentpoly
