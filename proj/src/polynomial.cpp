#include <momentpoly/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace momentpoly {

RationalPolynomial::RationalPolynomial(std::vector<BigRat> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    normalize();
}

RationalPolynomial::RationalPolynomial(long constant) {
    if (constant != 0) coeffs_.push_back(BigRat(constant));
}

RationalPolynomial::RationalPolynomial(const BigRat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

RationalPolynomial RationalPolynomial::monomial(const BigRat& coeff, int degree, std::string var) {
    RationalPolynomial p;
    p.var_ = std::move(var);
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, BigRat(0));
        p.coeffs_[degree] = coeff;
    }
    return p;
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat RationalPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigRat(0);
    return coeffs_[i];
}

BigRat RationalPolynomial::evaluate(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::compose(const RationalPolynomial& inner) const {
    RationalPolynomial acc;
    acc.var_ = inner.var_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += RationalPolynomial(*it);
    }
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRat> out(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRat& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

bool RationalPolynomial::try_divide(const RationalPolynomial& divisor, RationalPolynomial* quotient) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRat> rem = coeffs_;
    const int dd = divisor.degree();
    const BigRat& lead = divisor.coeffs_.back();
    std::vector<BigRat> q;
    if (static_cast<int>(rem.size()) - 1 >= dd) q.assign(rem.size() - dd, BigRat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        BigRat f = rem[i] / lead;
        q[i - dd] = f;
        for (int t = 0; t <= dd; ++t) rem[i - dd + t] -= f * divisor.coeffs_[t];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    if (quotient) {
        quotient->coeffs_ = std::move(q);
        quotient->var_ = var_;
        quotient->normalize();
    }
    return true;
}

RationalPolynomial RationalPolynomial::divide_exact(const RationalPolynomial& divisor) const {
    RationalPolynomial q;
    if (!try_divide(divisor, &q)) throw std::domain_error("polynomial division leaves a remainder");
    return q;
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRat& c = coeffs_[i];
        if (c == 0) continue;
        BigRat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            out << momentpoly::to_string(a);
        } else {
            if (a != 1) out << momentpoly::to_string(a) << "*";
            out << var_;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace momentpoly
