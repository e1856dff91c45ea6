#include <momentpoly/symbolic.hpp>

#include <functional>
#include <mutex>
#include <stdexcept>

namespace momentpoly {

namespace {

void check_order(int J) {
    if (J < 1 || J > kMaxSeriesOrder)
        throw std::invalid_argument("series order J must be in 1.." +
                                    std::to_string(kMaxSeriesOrder));
}

/// G with G(r) - G(r-1) = h(r) and G(0) = 0, via Faulhaber sums
/// sum_{s=1}^r s^m = (B_{m+1}(r+1) - B_{m+1}(1))/(m+1).
RationalPolynomial antidifference(const RationalPolynomial& h) {
    RationalPolynomial out;
    const RationalPolynomial r_plus_1({BigRat(1), BigRat(1)}, "r");
    for (int m = 0; m <= h.degree(); ++m) {
        const BigRat c = h.coeff(m);
        if (c == 0) continue;
        const RationalPolynomial& bp = bernoulli_polynomial(m + 1);
        RationalPolynomial s = bp.compose(r_plus_1) - RationalPolynomial(bp.evaluate(BigRat(1)));
        s *= make_rational(1, m + 1);
        out += s * c;
    }
    out.set_var("r");
    return out;
}

/// Coefficients of b_{r*}(k) as a polynomial in k, interpolated through
/// exact Newton-prefix values at 3r*+1 consecutive integers starting at k0.
RationalPolynomial interpolate_b_poly(int rstar, int k0) {
    const int d = 3 * rstar;  // degree of b_{r*}(k) in k
    std::vector<BigRat> xs, ys;
    for (int i = 0; i <= d; ++i) {
        const int k = k0 + i;
        xs.emplace_back(k);
        ys.emplace_back(BigRat(newton_prefix(k, rstar)[rstar]));
    }
    // Lagrange via the master polynomial M(x) = prod (x - x_i).
    RationalPolynomial master(1);
    for (const auto& x : xs) master *= RationalPolynomial({-x, BigRat(1)}, "k");
    RationalPolynomial out;
    for (size_t i = 0; i < xs.size(); ++i) {
        RationalPolynomial li = master.divide_exact(RationalPolynomial({-xs[i], BigRat(1)}, "k"));
        BigRat denom = li.evaluate(xs[i]);
        out += li * (ys[i] / denom);
    }
    out.set_var("k");
    return out;
}

}  // namespace

const RationalPolynomial& g_polynomial(int j) {
    if (j < 0) throw std::invalid_argument("g_polynomial requires j >= 0");
    static std::vector<RationalPolynomial> cache{RationalPolynomial(1)};  // g_0 = 1
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= j) {
        const int jj = static_cast<int>(cache.size());

        // h_jj(r) = sum_{n=2}^{jj+1} (-1)^{n-1} sum_a p_{n,a} g_{jj+1-n-a}(r-n)
        //           * (r-1)(r-2)...(r-n+1)
        RationalPolynomial h;
        for (int n = 2; n <= jj + 1; ++n) {
            const RationalPolynomial& pn = power_sum_polynomial(n);
            RationalPolynomial ff(1);
            for (int t = 1; t <= n - 1; ++t)
                ff *= RationalPolynomial({BigRat(-t), BigRat(1)}, "r");
            const RationalPolynomial r_minus_n({BigRat(-n), BigRat(1)}, "r");
            for (int a = 0; a <= jj + 1 - n; ++a) {
                const BigRat pna = pn.coeff(n + 2 - 2 * a);  // coefficient of k^{n+2-2a}
                if (pna == 0) continue;
                RationalPolynomial term = cache[jj + 1 - n - a].compose(r_minus_n) * ff;
                term *= (n % 2 == 1) ? pna : -pna;
                h += term;
            }
        }

        RationalPolynomial g = antidifference(h);

        // Pin the constant from one exact value g_jj(r*) = r*! b_{r*,jj}.
        const int rstar = (2 * jj + 2) / 3;  // smallest r with 3r - 2jj >= 0
        RationalPolynomial bpoly = interpolate_b_poly(rstar, jj + 2);
        BigRat anchor = BigRat(factorial(rstar)) * bpoly.coeff(3 * rstar - 2 * jj);
        g += RationalPolynomial(anchor - g.evaluate(BigRat(rstar)));
        g.set_var("r");

        if (g.degree() > 2 * jj)
            throw std::logic_error("g_j degree bound violated");
        cache.push_back(std::move(g));
    }
    return cache[j];
}

BExpansionTerm b_expansion_term(int j) {
    if (j < 0) throw std::invalid_argument("b_expansion_term requires j >= 0");
    RationalPolynomial num = g_polynomial(j);
    int shift = 0;
    RationalPolynomial quotient;
    while (!num.is_zero() &&
           num.try_divide(RationalPolynomial({BigRat(-shift), BigRat(1)}, "r"), &quotient)) {
        num = quotient;
        ++shift;
    }
    return {num, shift};
}

PolynomialSeries f_series(int J) {
    check_order(J);
    PolynomialSeries s(J);
    s[0] = RationalPolynomial(1);
    for (int j = 1; j <= J; ++j) s[j] = g_polynomial(j);
    return s;
}

const RationalPolynomial& q_polynomial(int j) {
    if (j < 1) throw std::invalid_argument("q_polynomial requires j >= 1");
    check_order(j);
    static std::vector<RationalPolynomial> cache(1);  // index 0 unused
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) <= j) {
        PolynomialSeries logf = series_log(f_series(j));
        cache.resize(j + 1);
        for (int i = 1; i <= j; ++i) {
            cache[i] = -logf[i];
            cache[i].set_var("r");
        }
    }
    return cache[j];
}

RationalPolynomial q_tilde_polynomial(int j) {
    if (j < 1) throw std::invalid_argument("q_tilde_polynomial requires j >= 1");
    const RationalPolynomial& bp = bernoulli_polynomial(j + 1);
    RationalPolynomial corr = bp - RationalPolynomial(bp.evaluate(BigRat(1)));
    corr *= make_rational(1, static_cast<long>(j + 1) * j);
    corr.set_var("r");
    RationalPolynomial out = q_polynomial(j) - corr;
    out.set_var("r");
    return out;
}

namespace {

/// a_m = (-1)^{m+1} p_m(k)/k^{m+2}
BigRat a_coefficient(int m, int k) {
    BigRat v = make_rational(power_sum_closed(m, k), pow_int(BigInt(k), m + 2));
    return (m % 2 == 1) ? v : -v;
}

}  // namespace

namespace {

RationalSeries lambda_series_impl(int k, int J) {
    RationalSeries a(J);
    for (int m = 1; m <= J; ++m) a[m] = a_coefficient(m, k);  // a[1] = 1 since p_1 = k^3

    RationalSeries y(J);
    y[1] = BigRat(1);
    for (int m = 2; m <= J; ++m) {
        // With lambda_m still unset, [x^m] of A(y(x)) misses exactly a_1*lambda_m.
        RationalSeries comp(J), ypow = y;
        for (int t = 1; t <= m; ++t) {
            RationalSeries term = ypow;
            term *= a[t];
            comp += term;
            if (t < m) ypow = ypow * y;
        }
        y[m] = -comp[m];
    }
    return y;
}

}  // namespace

RationalSeries lambda_series(int k, int J) {
    if (k < 1) throw std::invalid_argument("lambda_series requires k >= 1");
    check_order(J);
    return lambda_series_impl(k, J);
}

BigRat lagrange_lambda(int m, int k) {
    if (m < 1) throw std::invalid_argument("lagrange_lambda requires m >= 1");
    if (k < 1) throw std::invalid_argument("lagrange_lambda requires k >= 1");
    check_order(m);
    return lambda_series_impl(k, m)[m];
}

RationalSeries series_one_over_u(int k, int J) {
    if (k < 1) throw std::invalid_argument("series_one_over_u requires k >= 1");
    check_order(J);
    RationalSeries lam = lambda_series_impl(k, J + 1);
    RationalSeries out(J);
    for (int n = 0; n <= J; ++n) out[n] = lam[n + 1];
    return out;
}

RationalSeries series_u(int k, int J) { return reciprocal(series_one_over_u(k, J)); }

namespace {

/// sum_{m>=1} c_m x^{m-1} T(x)^m with T = series_one_over_u, where
/// weight(m) supplies c_m. Shared by the U and log P_k series.
RationalSeries compose_with_t(int k, int J, const std::function<BigRat(int)>& weight) {
    RationalSeries t = series_one_over_u(k, J);
    RationalSeries out(J);
    RationalSeries tpow = t;
    for (int m = 1; m <= J + 1; ++m) {
        RationalSeries term = tpow.shift(m - 1);
        term *= weight(m);
        out += term;
        if (m <= J) tpow = tpow * t;
    }
    return out;
}

}  // namespace

RationalSeries series_big_u(int k, int J) {
    return compose_with_t(k, J, [k](int m) { return a_coefficient(m, k) * BigRat(m); });
}

RationalSeries series_log_pk(int k, int J) {
    return compose_with_t(k, J,
                          [k](int m) { return a_coefficient(m, k) * make_rational(1, m); });
}

}  // namespace momentpoly
