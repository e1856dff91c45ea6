#pragma once

#include <momentpoly/exact.hpp>
#include <momentpoly/series.hpp>

namespace momentpoly {

/// Highest truncation order accepted by the series builders below.
/// Coefficient sizes explode past this and nothing downstream needs more.
inline constexpr int kMaxSeriesOrder = 12;

/// g_j(r): the exact polynomial with b_{r,j} = g_j(r)/r!, where b_{r,j} is
/// the coefficient of k^{3r-2j} in b_r(k). Solves the difference equation
/// g_j(r) - g_j(r-1) = h_j(r) coming from the Newton recursion; the free
/// constant is pinned by interpolating exact tables b_{r*}(k) in k over
/// k = j+2 .. 3j+4 at the smallest r* with 3r*-2j >= 0. Memoized.
const RationalPolynomial& g_polynomial(int j);

/// The j-th term of the b_r(k) expansion in normalized form: a numerator
/// polynomial over (r-shift)!, with shift the largest m such that
/// r(r-1)...(r-m+1) divides g_j exactly. So b_{r,j} = numerator(r)/(r-shift)!.
struct BExpansionTerm {
    RationalPolynomial numerator;
    int shift;
};
BExpansionTerm b_expansion_term(int j);

/// F_r(z) = 1 + sum_{j=1}^{J} g_j(r) z^j, coefficients polynomial in r.
PolynomialSeries f_series(int J);

/// q_j(r) = -(coefficient of z^j in log F_r(z)): degree j+1, divisible by
/// r(r-1), the j-th exponent polynomial of the explicit expansion
/// c_r/c_0 = (k^{3r}/r!) exp(-sum_j q_j(r)/k^{2j}). Memoized.
const RationalPolynomial& q_polynomial(int j);

/// Binomial-form variant: q~_j(r) = q_j(r) - (B_{j+1}(r) - B_{j+1}(1))/((j+1) j),
/// the exponent of c_r/c_0 = k^r C(k^2, r) exp(-sum_j q~_j(r)/k^{2j}).
RationalPolynomial q_tilde_polynomial(int j);

/// Lagrange-inversion coefficients lambda_m(k) of the series
/// y = sum_m lambda_m x^m inverting sum_m a_m y^m = x, with
/// a_m = (-1)^{m+1} p_m(k)/k^{m+2}. Exact rationals for a fixed integer k.
/// Entry [m] holds lambda_m (entry [0] is zero).
RationalSeries lambda_series(int k, int J);

BigRat lagrange_lambda(int m, int k);

/// Series in x = r/k^2 for (1/u)*(k^3/r): coefficient [n] = lambda_{n+1}(k).
RationalSeries series_one_over_u(int k, int J);

/// Series in x for u*(r/k^3): formal reciprocal of series_one_over_u.
RationalSeries series_u(int k, int J);

/// Series in x for U/r (saddle curvature over r).
RationalSeries series_big_u(int k, int J);

/// Series in x for log(P_k(u)/(c_0 u^{k^2}))/r.
RationalSeries series_log_pk(int k, int J);

}  // namespace momentpoly
