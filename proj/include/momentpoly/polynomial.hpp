#pragma once

#include <momentpoly/numeric.hpp>

#include <string>
#include <vector>

namespace momentpoly {

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. The trailing coefficient is nonzero unless the polynomial
/// is zero (empty coefficient vector). The variable name is informational
/// only; arithmetic ignores it.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRat> coeffs, std::string var = "r");
    RationalPolynomial(long constant);  // NOLINT(google-explicit-constructor)
    RationalPolynomial(const BigRat& constant);  // NOLINT(google-explicit-constructor)

    static RationalPolynomial monomial(const BigRat& coeff, int degree, std::string var = "r");

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }

    /// Coefficient of x^i (zero beyond the stored degree).
    BigRat coeff(int i) const;

    BigRat evaluate(const BigRat& x) const;

    /// Substitute x -> inner(x), e.g. to form B(k+1) from B(x).
    RationalPolynomial compose(const RationalPolynomial& inner) const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const BigRat& s);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const BigRat& s) { return a *= s; }
    friend RationalPolynomial operator*(const BigRat& s, RationalPolynomial a) { return a *= s; }
    RationalPolynomial operator-() const;

    bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RationalPolynomial& o) const { return !(*this == o); }

    /// Quotient of exact division; throws std::domain_error when the
    /// remainder is nonzero.
    RationalPolynomial divide_exact(const RationalPolynomial& divisor) const;

    /// True when `divisor` divides this polynomial exactly; quotient stored
    /// in *quotient when provided.
    bool try_divide(const RationalPolynomial& divisor, RationalPolynomial* quotient) const;

    /// "c0 + c1*r + c2*r^2" with exact rationals, zero terms skipped.
    std::string to_string() const;

private:
    void normalize();

    std::vector<BigRat> coeffs_;
    std::string var_ = "r";
};

}  // namespace momentpoly
