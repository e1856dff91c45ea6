#pragma once

#include <momentpoly/polynomial.hpp>

#include <stdexcept>
#include <vector>

namespace momentpoly {

/// Thrown when the Newton recursion produces a non-integer b_r, which can
/// only happen through an arithmetic or indexing bug.
class IntegralityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The multiset {1, 2,2, 3,3,3, ..., 2k-1} of k^2 numbers: element j has
/// multiplicity j for j <= k and 2k-j for j > k. These are the negated
/// roots of the moment polynomial P_k.
struct MomentMultiset {
    int k;

    explicit MomentMultiset(int k_) : k(k_) {
        if (k < 1) throw std::invalid_argument("k must be positive");
    }

    /// Multiplicity of j; zero outside 1..2k-1.
    long multiplicity(long j) const {
        if (j < 1 || j >= 2L * k) return 0;
        return j <= k ? j : 2L * k - j;
    }

    long total() const { return static_cast<long>(k) * k; }
    long largest() const { return 2L * k - 1; }
};

/// p_n(k): the n-th power sum over the moment multiset, by direct summation.
BigInt power_sum(int n, int k);

/// Same value via the Bernoulli-polynomial closed form; agrees with
/// power_sum bit-exactly and costs O(n) big-integer operations instead of
/// O(k) exponentiations.
BigInt power_sum_closed(int n, int k);

/// Bernoulli polynomial B_m(x) with exact rational coefficients
/// (B_1(x) = x - 1/2 convention). Results are memoized.
const RationalPolynomial& bernoulli_polynomial(int m);

/// p_n(k) as an exact polynomial in k (degree n+2, parity (-1)^n). Memoized.
const RationalPolynomial& power_sum_polynomial(int n);

/// All coefficients of P_k for one k: b_r = c_r/c_0 as exact big integers
/// (r = 0..k^2) plus the leading coefficient c_0 as an exact rational.
struct CoefficientTable {
    int k = 0;
    BigRat c0;
    std::vector<BigInt> b;  // b[r], r = 0..k^2

    const BigInt& b_at(long r) const;

    /// c_r(k) = c_0 * b_r; throws IndexOutOfRange beyond r = k^2.
    BigRat coefficient(long r) const;

    /// P_k(N) by Horner evaluation over exact rationals.
    BigRat evaluate(const BigRat& N) const;

    /// All r achieving the maximal b_r (size 1, or 2 on a tie).
    std::vector<long> argmax() const;

    struct Peak {
        bool unimodal;
        long peak;
    };
    /// Single scan checking monotone rise then fall. On a plateau of equal
    /// maxima the reported peak is the last index of the (non-strict) rise.
    Peak unimodality_peak() const;
};

/// c_0(k) = prod_{j=0}^{k-1} j!/(j+k)! as an exact rational.
BigRat leading_coefficient(int k);

/// Full table via Newton's identities r*b_r = sum (-1)^{n-1} p_n b_{r-n},
/// with exact rational division and an integrality check on every b_r.
CoefficientTable newton_coefficients(int k);

/// First rmax+1 entries b_0..b_rmax of the Newton recursion.
std::vector<BigInt> newton_prefix(int k, int rmax);

/// Full table by multiplying out prod (x+j)^mult(j) with a balanced product
/// tree; bit-exactly equal to newton_coefficients. Inner merges run in
/// parallel when OpenMP is enabled; the result is deterministic and
/// independent of thread count.
CoefficientTable expand_product(int k);

/// Sequential reference: accumulate one linear factor at a time. Kept for
/// testing and benchmarking against the tree version.
CoefficientTable expand_product_serial(int k);

}  // namespace momentpoly
