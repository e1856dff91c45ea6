#pragma once

#include <momentpoly/logvalue.hpp>
#include <momentpoly/numeric.hpp>

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace momentpoly {

/// Thrown by estimators whose formulas degenerate at r = 0 or r = k^2.
class EndpointExcluded : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when the saddle correction bracket comes out nonpositive, which
/// signals r too close to an endpoint for the requested truncation M.
class CorrectionDiverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A = 2 sum_{j=k+1}^{2k} 1/j  (= log 4 + 1/(2k) + O(1/k^2)), compensated.
double a_const(int k);

/// log c_0(k) = sum_{j=0}^{k-1} (lgamma(j+1) - lgamma(j+k+1)).
double log_c0(int k);

/// Four-term expansion of log c_0(k) from the Barnes G asymptotics:
/// -k^2 log k - k^2 log 4 + 3k^2/2 - (1/12) log k + zeta'(-1) + log(2)/12,
/// accurate to O(1/k).
double log_c0_asymptotic(int k);

/// h(x) = x sum_{j<=k} j/(x+j) + x sum_{k<j<=2k} (2k-j)/(x+j); strictly
/// increasing from 0 to k^2 on (0, inf).
double h_function(int k, double x);

/// h'(x) = sum_j mult(j) j/(x+j)^2; U = x h'(x).
double h_derivative(int k, double x);

/// log P_k(u) = log c_0 + sum_j mult(j) log(u+j), compensated. Valid u >= 0.
double log_pk_at(int k, double u);

struct SaddleData {
    int k = 0;
    long r = 0;
    double u = 0;       // unique positive root of h(u) = k^2 - r
    double U = 0;       // u h'(u) > 0, the curvature at the saddle
    double f_at_u = 0;  // log P_k(u) - (k^2 - r) log u
};

/// Safeguarded Newton with bisection fallback; residual tolerance
/// |h(u) - (k^2 - r)| <= 1e-10 k^2. Endpoints r = 0, k^2 are rejected.
SaddleData solve_saddle(int k, long r);

/// Leading saddle-point term: P_k(u) / (sqrt(2 pi U) u^{k^2-r}).
LogValue saddle_estimate(int k, long r);

/// Taylor data of f(u e^{i theta}) about theta = 0: gamma[n] is the theta^n
/// coefficient (gamma[2] = -U/2) and mu[m] the coefficient of the formal
/// exponential of the cubic-and-higher part, so
/// 1 + sum_{m>=3} mu[m] theta^m = exp(sum_{n>=3} gamma[n] theta^n).
struct GammaSeries {
    int k = 0;
    long r = 0;
    double u = 0;
    double U = 0;
    std::vector<std::complex<double>> gamma;  // index 0..order; [0], [1] unused
    std::vector<std::complex<double>> mu;     // index 0..order; mu[0] = 1
};

/// Truncated complex power-series composition per root; order <= 16.
GammaSeries gamma_series(int k, long r, int order);

/// gamma_3 by the closed three-derivative sum (iu/3!) sum_j mult(j) j (u-j)/(u+j)^3.
std::complex<double> gamma3_closed_form(int k, long r);

/// Real part of 1 + sum_{m=2}^{floor((M-1)/2)} 2^m Gamma(m+1/2) mu_{2m} / (sqrt(pi) U^m).
/// Requires 5 <= M <= 17; throws CorrectionDiverged when the bracket is <= 0.
double correction_bracket(int k, long r, int M);

/// saddle_estimate multiplied by the correction bracket.
LogValue corrected_saddle_estimate(int k, long r, int M);

/// Uniform-in-r estimate of c_r(k):
/// sqrt(2 pi) e^{-k^2}/k^2! * C(k^2,r) * P_k(u)/(sqrt(U) u^{k^2-r})
///   * (k^2-r)^{k^2-r+1/2} * r^{r+1/2}.
LogValue uniform_estimate(int k, long r);

enum class TailForm { factorial, binomial };

/// Sentinel for the log_c0_value parameters below: compute via log_c0(k).
inline constexpr double kUseLgammaC0 = std::numeric_limits<double>::quiet_NaN();

/// Low-tail estimate of c_r: c_0 k^{3r}/r!  or  c_0 C(k^2,r) k^r.
/// Pass the exact-backed log c_0 when ratios against exact values should
/// cancel it; defaults to log_c0(k).
LogValue tail_low_estimate(int k, long r, TailForm form, double log_c0_value = kUseLgammaC0);

/// High-tail estimate of c_{k^2-s}: (kA)^s/s!  or  C(k^2,s) (A/k)^s.
LogValue tail_high_estimate(int k, long s, TailForm form);

/// Explicit exponential-series estimate of c_r:
/// c_0 (k^{3r}/r!) exp(-sum_{j<=J} q_j(r)/k^{2j}), or with the binomial
/// variant c_0 k^r C(k^2,r) exp(-sum_{j<=J} q~_j(r)/k^{2j}). 1 <= J <= 8.
LogValue precise_expansion_estimate(int k, long r, int J, bool binomial_variant = false,
                                    double log_c0_value = kUseLgammaC0);

struct MuLocation {
    BigRat exact;  // sum_{j<=k} j/(j+1) + sum_{k<j<=2k} (2k-j)/(j+1) = h(1)
    double value;
};
MuLocation mu_location(int k);

/// [k^2 - mu - rho log(k)^2/k, k^2 - mu + 1 + rho log(k)^2/k]: the window
/// guaranteed to contain every maximal coefficient index.
std::pair<double, double> predicted_max_interval(int k, double rho);

/// Predicted sign of c_{r+1} - c_r from the leading factor
/// (u-1)(1 + u/(2U)); 0 when |u-1| < 1e-12. Only trustworthy when |u-1|
/// exceeds the guard band 10 log(k)^2/k^2.
int delta_sign_estimate(int k, long r);

struct Lemma4Pilot {
    double u_pilot;
    double U_pilot;
};

/// Closed-form pilot values: u ~ (k^2-r)/(kA), U ~ k^2-r for r > k^2/2;
/// u ~ k^3/r, U ~ r otherwise. Used to bracket the saddle solve and as the
/// asymptotic regime reference.
Lemma4Pilot lemma4_pilot(int k, long r);

}  // namespace momentpoly
