// Test-only oracle: Taylor coefficients of f(u e^{i theta}) about theta = 0
// by Richardson-extrapolated central finite differences of the directly
// evaluated function. Independent of the series-composition path in the
// library, so the two can check each other.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace momentpoly::testoracle {

using Cpx = std::complex<double>;

/// e^{ix} - 1 without cancellation.
inline Cpx expi_m1(double x) { return {-2.0 * std::pow(std::sin(x / 2.0), 2), std::sin(x)}; }

/// f(u e^{i theta}) - f(u) with each root's linear theta-term removed
/// analytically (their total is the saddle residual, below every tolerance
/// in play). Keeping all evaluated magnitudes O(theta^2) is what makes
/// sixth differences representable in binary64.
inline Cpx f_circle_centered(int k, long r, double u, double theta) {
    (void)r;
    Cpx acc(0.0, 0.0);
    for (long j = 1; j <= 2L * k - 1; ++j) {
        const long w = j <= k ? j : 2L * k - j;
        const double sj = u / (u + static_cast<double>(j));
        const Cpx wj =
            (1.0 - sj) * expi_m1(-sj * theta) + sj * expi_m1((1.0 - sj) * theta);
        acc += static_cast<double>(w) * std::log(1.0 + wj);
    }
    return acc;
}

/// gamma_n = f^(n-th Taylor coefficient), n in 2..6, via the classic
/// ridders-style extrapolation over step halvings with error tracking.
inline Cpx fd_gamma(int k, long r, double u, int n, double h0 = 1.0, int ntab = 10) {
    struct Stencil {
        std::vector<double> w;
        int half;
    };
    static const std::array<Stencil, 7> stencils = {{
        {},
        {},
        {{1.0, -2.0, 1.0}, 1},
        {{-0.5, 1.0, 0.0, -1.0, 0.5}, 2},
        {{1.0, -4.0, 6.0, -4.0, 1.0}, 2},
        {{-0.5, 2.0, -2.5, 0.0, 2.5, -2.0, 0.5}, 3},
        {{1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0}, 3},
    }};
    const Stencil& st = stencils.at(n);
    auto fd = [&](double h) {
        Cpx s(0.0, 0.0);
        for (size_t idx = 0; idx < st.w.size(); ++idx) {
            if (st.w[idx] == 0.0) continue;
            s += st.w[idx] * f_circle_centered(k, r, u, (static_cast<int>(idx) - st.half) * h);
        }
        return s / std::pow(h, n);
    };

    const double con = 1.4, con2 = con * con;
    std::vector<std::vector<Cpx>> a(ntab, std::vector<Cpx>(ntab));
    double hh = h0;
    a[0][0] = fd(hh);
    Cpx ans = a[0][0];
    double err = std::numeric_limits<double>::infinity();
    for (int i = 1; i < ntab; ++i) {
        hh /= con;
        a[0][i] = fd(hh);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            const double errt = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                         std::abs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= err) {
                err = errt;
                ans = a[j][i];
            }
        }
    }
    double nfact = 1.0;
    for (int t = 2; t <= n; ++t) nfact *= t;
    return ans / nfact;
}

}  // namespace momentpoly::testoracle
