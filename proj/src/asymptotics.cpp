#include <momentpoly/asymptotics.hpp>

#include <momentpoly/exact.hpp>
#include <momentpoly/symbolic.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace momentpoly {

namespace {

constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

/// Kahan compensated accumulator.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

long weight(int k, long j) { return j <= k ? j : 2L * k - j; }

void require_interior(int k, long r, const char* who) {
    const long n = static_cast<long>(k) * k;
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be positive");
    if (r <= 0 || r >= n) {
        std::ostringstream msg;
        msg << who << ": r=" << r << " outside the open range (0, " << n << ")";
        throw EndpointExcluded(msg.str());
    }
}

double lchoose(long n, long r) {
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(r) + 1) -
           std::lgamma(static_cast<double>(n - r) + 1);
}

}  // namespace

double a_const(int k) {
    if (k < 1) throw std::invalid_argument("a_const requires k >= 1");
    KahanSum s;
    for (long j = k + 1; j <= 2L * k; ++j) s.add(2.0 / static_cast<double>(j));
    return s.value();
}

double log_c0(int k) {
    if (k < 1) throw std::invalid_argument("log_c0 requires k >= 1");
    KahanSum s;
    for (int j = 0; j < k; ++j)
        s.add(std::lgamma(j + 1.0) - std::lgamma(j + k + 1.0));
    return s.value();
}

double log_c0_asymptotic(int k) {
    if (k < 2) throw std::invalid_argument("log_c0_asymptotic requires k >= 2");
    const double kk = static_cast<double>(k) * k;
    const double lk = std::log(static_cast<double>(k));
    return -kk * lk - kk * std::log(4.0) + 1.5 * kk - lk / 12.0 + kZetaPrimeMinusOne +
           std::log(2.0) / 12.0;
}

double h_function(int k, double x) {
    KahanSum s;
    for (long j = 1; j <= 2L * k - 1; ++j)
        s.add(x * static_cast<double>(weight(k, j)) / (x + static_cast<double>(j)));
    return s.value();
}

double h_derivative(int k, double x) {
    KahanSum s;
    for (long j = 1; j <= 2L * k - 1; ++j) {
        const double d = x + static_cast<double>(j);
        s.add(static_cast<double>(weight(k, j)) * static_cast<double>(j) / (d * d));
    }
    return s.value();
}

double log_pk_at(int k, double u) {
    if (k < 1 || u < 0) throw std::invalid_argument("log_pk_at requires k >= 1 and u >= 0");
    KahanSum s;
    s.add(log_c0(k));
    for (long j = 1; j <= 2L * k - 1; ++j)
        s.add(static_cast<double>(weight(k, j)) * std::log(u + static_cast<double>(j)));
    return s.value();
}

Lemma4Pilot lemma4_pilot(int k, long r) {
    require_interior(k, r, "lemma4_pilot");
    const long n = static_cast<long>(k) * k;
    if (2 * r > n) {
        const double rem = static_cast<double>(n - r);
        return {rem / (k * a_const(k)), rem};
    }
    const double rd = static_cast<double>(r);
    return {static_cast<double>(k) * k * k / rd, rd};
}

SaddleData solve_saddle(int k, long r) {
    require_interior(k, r, "solve_saddle");
    const long n = static_cast<long>(k) * k;
    const double target = static_cast<double>(n - r);
    const double tol = 1e-10 * static_cast<double>(n);

    const double pilot = lemma4_pilot(k, r).u_pilot;
    double lo = std::max(1e-9, pilot / 4.0);
    double hi = 4.0 * pilot + 4.0 * k;
    // h is increasing with range (0, k^2), so a bracket always exists.
    while (h_function(k, lo) >= target) lo /= 2.0;
    while (h_function(k, hi) <= target) hi *= 2.0;

    double x = std::clamp(pilot, lo, hi);
    double fx = h_function(k, x) - target;
    for (int iter = 0; iter < 200 && std::fabs(fx) > tol; ++iter) {
        if (fx > 0)
            hi = x;
        else
            lo = x;
        const double deriv = h_derivative(k, x);
        double next = x - fx / deriv;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x = next;
        fx = h_function(k, x) - target;
    }

    SaddleData s;
    s.k = k;
    s.r = r;
    s.u = x;
    s.U = x * h_derivative(k, x);
    s.f_at_u = log_pk_at(k, x) - target * std::log(x);
    return s;
}

LogValue saddle_estimate(int k, long r) {
    const SaddleData s = solve_saddle(k, r);
    return LogValue::from_log(s.f_at_u - 0.5 * std::log(2.0 * M_PI * s.U));
}

namespace {

using Cpx = std::complex<double>;

/// Coefficients of e^{i theta} - 1 up to `order`.
std::vector<Cpx> expi_minus_one(int order) {
    std::vector<Cpx> e(order + 1, Cpx(0.0, 0.0));
    Cpx ipow(1.0, 0.0);
    double fact = 1.0;
    for (int n = 1; n <= order; ++n) {
        ipow *= Cpx(0.0, 1.0);
        fact *= n;
        e[n] = ipow / fact;
    }
    return e;
}

/// log(1 + w) for a series w with no constant term.
std::vector<Cpx> series_log1p(const std::vector<Cpx>& w) {
    const int order = static_cast<int>(w.size()) - 1;
    std::vector<Cpx> out(order + 1, Cpx(0.0, 0.0));
    for (int n = 1; n <= order; ++n) {
        Cpx acc = w[n] * static_cast<double>(n);
        for (int m = 1; m < n; ++m) acc -= out[m] * static_cast<double>(m) * w[n - m];
        out[n] = acc / static_cast<double>(n);
    }
    return out;
}

}  // namespace

GammaSeries gamma_series(int k, long r, int order) {
    require_interior(k, r, "gamma_series");
    if (order < 2 || order > 16)
        throw std::invalid_argument("gamma_series order must be in 2..16");
    const SaddleData s = solve_saddle(k, r);

    const std::vector<Cpx> e = expi_minus_one(order);
    std::vector<Cpx> acc(order + 1, Cpx(0.0, 0.0));
    std::vector<Cpx> w(order + 1);
    for (long j = 1; j <= 2L * k - 1; ++j) {
        const double sj = s.u / (s.u + static_cast<double>(j));
        for (int n = 0; n <= order; ++n) w[n] = sj * e[n];
        const std::vector<Cpx> lg = series_log1p(w);
        const double wt = static_cast<double>(weight(k, j));
        for (int n = 1; n <= order; ++n) acc[n] += wt * lg[n];
    }
    const long n2 = static_cast<long>(k) * k - r;
    acc[1] -= Cpx(0.0, static_cast<double>(n2));  // saddle condition: ~0 up to solver residual

    GammaSeries out;
    out.k = k;
    out.r = r;
    out.u = s.u;
    out.U = s.U;
    out.gamma = acc;
    out.mu.assign(order + 1, Cpx(0.0, 0.0));
    out.mu[0] = Cpx(1.0, 0.0);
    for (int n = 1; n <= order; ++n) {
        Cpx t(0.0, 0.0);
        for (int m = 3; m <= n; ++m) t += static_cast<double>(m) * acc[m] * out.mu[n - m];
        out.mu[n] = t / static_cast<double>(n);
    }
    return out;
}

std::complex<double> gamma3_closed_form(int k, long r) {
    const SaddleData s = solve_saddle(k, r);
    KahanSum sum;
    for (long j = 1; j <= 2L * k - 1; ++j) {
        const double d = s.u + static_cast<double>(j);
        sum.add(static_cast<double>(weight(k, j)) * static_cast<double>(j) * (s.u - j) /
                (d * d * d));
    }
    // (iu/3!) applied to the whole weighted sum
    return Cpx(0.0, s.u / 6.0) * sum.value();
}

double correction_bracket(int k, long r, int M) {
    if (M < 5) throw std::invalid_argument("correction_bracket requires M >= 5");
    if (M > 17) throw std::invalid_argument("correction_bracket requires M <= 17");
    const int mmax = (M - 1) / 2;
    const GammaSeries gs = gamma_series(k, r, 2 * mmax);
    Cpx bracket(1.0, 0.0);
    double upow = gs.U * gs.U;
    for (int m = 2; m <= mmax; ++m) {
        const double coeff = std::pow(2.0, m) * std::tgamma(m + 0.5) / std::sqrt(M_PI);
        bracket += coeff * gs.mu[2 * m] / upow;
        upow *= gs.U;
    }
    const double re = bracket.real();
    if (re <= 0.0) {
        std::ostringstream msg;
        msg << "correction bracket " << re << " <= 0 at k=" << k << " r=" << r << " M=" << M;
        throw CorrectionDiverged(msg.str());
    }
    return re;
}

LogValue corrected_saddle_estimate(int k, long r, int M) {
    const double bracket = correction_bracket(k, r, M);
    return saddle_estimate(k, r) * LogValue::from_double(bracket);
}

LogValue uniform_estimate(int k, long r) {
    require_interior(k, r, "uniform_estimate");
    const SaddleData s = solve_saddle(k, r);
    const long n = static_cast<long>(k) * k;
    const double rd = static_cast<double>(r);
    const double rem = static_cast<double>(n - r);
    const double logv = 0.5 * std::log(2.0 * M_PI) - static_cast<double>(n) -
                        std::lgamma(rd + 1.0) - std::lgamma(rem + 1.0) + log_pk_at(k, s.u) -
                        0.5 * std::log(s.U) - rem * std::log(s.u) +
                        (rem + 0.5) * std::log(rem) + (rd + 0.5) * std::log(rd);
    return LogValue::from_log(logv);
}

namespace {

double resolve_c0(int k, double log_c0_value) {
    return std::isnan(log_c0_value) ? log_c0(k) : log_c0_value;
}

}  // namespace

LogValue tail_low_estimate(int k, long r, TailForm form, double log_c0_value) {
    const long n = static_cast<long>(k) * k;
    if (k < 1 || r < 0 || r > n)
        throw std::invalid_argument("tail_low_estimate requires 0 <= r <= k^2");
    const double lc0 = resolve_c0(k, log_c0_value);
    const double lk = std::log(static_cast<double>(k));
    double logv;
    if (form == TailForm::factorial)
        logv = lc0 + 3.0 * r * lk - std::lgamma(static_cast<double>(r) + 1.0);
    else
        logv = lc0 + lchoose(n, r) + r * lk;
    return LogValue::from_log(logv);
}

LogValue tail_high_estimate(int k, long s, TailForm form) {
    const long n = static_cast<long>(k) * k;
    if (k < 1 || s < 0 || s > n)
        throw std::invalid_argument("tail_high_estimate requires 0 <= s <= k^2");
    const double la = std::log(a_const(k));
    const double lk = std::log(static_cast<double>(k));
    double logv;
    if (form == TailForm::factorial)
        logv = s * (lk + la) - std::lgamma(static_cast<double>(s) + 1.0);
    else
        logv = lchoose(n, s) + s * (la - lk);
    return LogValue::from_log(logv);
}

LogValue precise_expansion_estimate(int k, long r, int J, bool binomial_variant,
                                    double log_c0_value) {
    const long n = static_cast<long>(k) * k;
    if (k < 1 || r < 0 || r > n)
        throw std::invalid_argument("precise_expansion_estimate requires 0 <= r <= k^2");
    if (J < 1 || J > 8)
        throw std::invalid_argument("precise_expansion_estimate requires 1 <= J <= 8");
    const double lc0 = resolve_c0(k, log_c0_value);
    const double lk = std::log(static_cast<double>(k));

    // Exponent sum evaluated exactly, one float conversion at the end.
    BigRat expsum(0);
    const BigRat rq(r);
    for (int j = 1; j <= J; ++j) {
        const RationalPolynomial qj =
            binomial_variant ? q_tilde_polynomial(j) : q_polynomial(j);
        expsum += qj.evaluate(rq) / BigRat(pow_int(BigInt(k), 2 * j));
    }
    const double correction = -expsum.get_d();

    double logv;
    if (binomial_variant)
        logv = lc0 + r * lk + lchoose(n, r) + correction;
    else
        logv = lc0 + 3.0 * r * lk - std::lgamma(static_cast<double>(r) + 1.0) + correction;
    return LogValue::from_log(logv);
}

MuLocation mu_location(int k) {
    if (k < 1) throw std::invalid_argument("mu_location requires k >= 1");
    BigRat mu(0);
    for (long j = 1; j <= 2L * k - 1; ++j) mu += make_rational(weight(k, j), j + 1);
    return {mu, mu.get_d()};
}

std::pair<double, double> predicted_max_interval(int k, double rho) {
    if (k < 2) throw std::invalid_argument("predicted_max_interval requires k >= 2");
    if (!(rho > 0)) throw std::invalid_argument("predicted_max_interval requires rho > 0");
    const double center = static_cast<double>(k) * k - mu_location(k).value;
    const double lk = std::log(static_cast<double>(k));
    const double halo = rho * lk * lk / k;
    return {center - halo, center + 1.0 + halo};
}

int delta_sign_estimate(int k, long r) {
    require_interior(k, r, "delta_sign_estimate");
    const SaddleData s = solve_saddle(k, r);
    if (std::fabs(s.u - 1.0) < 1e-12) return 0;
    const double lead = (s.u - 1.0) * (1.0 + s.u / (2.0 * s.U));
    return lead > 0 ? 1 : (lead < 0 ? -1 : 0);
}

}  // namespace momentpoly
