#pragma once

#include <momentpoly/polynomial.hpp>

#include <stdexcept>
#include <vector>

namespace momentpoly {

namespace detail {

inline BigRat coeff_inverse(const BigRat& c) {
    if (c == 0) throw std::domain_error("series constant term is not invertible");
    return 1 / c;
}

inline RationalPolynomial coeff_inverse(const RationalPolynomial& c) {
    if (c.degree() > 0 || c.is_zero())
        throw std::domain_error("series constant term is not invertible");
    return RationalPolynomial(1 / c.coeff(0));
}

}  // namespace detail

/// Power series truncated at a fixed order J: exactly J+1 stored
/// coefficients, indexed by power. All arithmetic truncates consistently
/// at order J. Coeff is an exact rational scalar or a polynomial.
template <typename Coeff>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(order + 1, Coeff(0)) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    }
    TruncatedSeries(int order, std::vector<Coeff> coeffs) : TruncatedSeries(order) {
        for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Coeff& operator[](int i) const { return c_.at(i); }
    Coeff& operator[](int i) { return c_.at(i); }
    const std::vector<Coeff>& coeffs() const { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncatedSeries& operator*=(const Coeff& s) {
        for (auto& c : c_) c = c * s;
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == Coeff(0)) continue;
            for (int j = 0; i + j <= a.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }

    /// Multiply by x^n (coefficients above the truncation order fall off).
    TruncatedSeries shift(int n) const {
        TruncatedSeries out(order());
        for (int i = 0; i + n <= order(); ++i) out.c_[i + n] = c_[i];
        return out;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

private:
    void check_order(const TruncatedSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    }

    std::vector<Coeff> c_;
};

using RationalSeries = TruncatedSeries<BigRat>;
using PolynomialSeries = TruncatedSeries<RationalPolynomial>;

/// 1/a for a series with invertible constant term.
template <typename Coeff>
TruncatedSeries<Coeff> reciprocal(const TruncatedSeries<Coeff>& a) {
    const int J = a.order();
    TruncatedSeries<Coeff> out(J);
    Coeff inv0 = detail::coeff_inverse(a[0]);
    out[0] = inv0;
    for (int n = 1; n <= J; ++n) {
        Coeff acc(0);
        for (int i = 1; i <= n; ++i) acc += a[i] * out[n - i];
        out[n] = -(acc * inv0);
    }
    return out;
}

/// log(a) for a series with constant term 1; result has constant term 0.
template <typename Coeff>
TruncatedSeries<Coeff> series_log(const TruncatedSeries<Coeff>& a) {
    if (!(a[0] == Coeff(1))) throw std::domain_error("series_log requires constant term 1");
    const int J = a.order();
    TruncatedSeries<Coeff> out(J);
    for (int n = 1; n <= J; ++n) {
        Coeff acc = a[n] * BigRat(n);
        for (int m = 1; m < n; ++m) acc -= (out[m] * BigRat(m)) * a[n - m];
        out[n] = acc * make_rational(1, n);
    }
    return out;
}

/// exp(a) for a series with constant term 0; result has constant term 1.
template <typename Coeff>
TruncatedSeries<Coeff> series_exp(const TruncatedSeries<Coeff>& a) {
    if (!(a[0] == Coeff(0))) throw std::domain_error("series_exp requires constant term 0");
    const int J = a.order();
    TruncatedSeries<Coeff> out(J);
    out[0] = Coeff(1);
    for (int n = 1; n <= J; ++n) {
        Coeff acc(0);
        for (int m = 1; m <= n; ++m) acc += (a[m] * BigRat(m)) * out[n - m];
        out[n] = acc * make_rational(1, n);
    }
    return out;
}

}  // namespace momentpoly
