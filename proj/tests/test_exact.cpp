#include <momentpoly/exact.hpp>

#include <doctest.h>

using namespace momentpoly;

TEST_CASE("moment multiset structure") {
    for (int k = 1; k <= 20; ++k) {
        MomentMultiset ms(k);
        long total = 0;
        for (long j = 1; j <= 2L * k; ++j) total += ms.multiplicity(j);
        CHECK(total == static_cast<long>(k) * k);
        CHECK(ms.multiplicity(1) == 1);
        CHECK(ms.multiplicity(2L * k - 1) == 1);
        CHECK(ms.multiplicity(2L * k) == 0);
        CHECK(ms.multiplicity(0) == 0);
    }
    CHECK_THROWS_AS(MomentMultiset(0), std::invalid_argument);
}

TEST_CASE("power sums by direct summation") {
    CHECK(power_sum(1, 7) == 343);
    CHECK(power_sum(3, 1) == 1);
    CHECK(power_sum(2, 2) == 18);
    CHECK_THROWS_AS(power_sum(0, 3), std::invalid_argument);
}

TEST_CASE("closed form matches direct summation bit-exactly") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= 50; ++k) CHECK(power_sum_closed(n, k) == power_sum(n, k));
}

TEST_CASE("closed form spot values") {
    CHECK(power_sum_closed(1, 7) == 343);
    CHECK(power_sum_closed(2, 1) == 1);
    // (511/45)k^10 - (127/6)k^8 + (217/15)k^6 - (35/9)k^4 + (7/30)k^2 at k=3
    RationalPolynomial p8({BigRat(0), BigRat(0), make_rational(7, 30), BigRat(0),
                           make_rational(-35, 9), BigRat(0), make_rational(217, 15), BigRat(0),
                           make_rational(-127, 6), BigRat(0), make_rational(511, 45)},
                          "k");
    CHECK(BigRat(power_sum_closed(8, 3)) == p8.evaluate(BigRat(3)));
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_polynomial(0) == RationalPolynomial(1));
    CHECK(bernoulli_polynomial(1) ==
          RationalPolynomial({make_rational(-1, 2), BigRat(1)}, "x"));
    CHECK(bernoulli_polynomial(2) ==
          RationalPolynomial({make_rational(1, 6), BigRat(-1), BigRat(1)}, "x"));
    CHECK(bernoulli_polynomial(12).coeff(0) == make_rational(-691, 2730));
}

TEST_CASE("power sum polynomial has parity (-1)^n") {
    for (int n = 1; n <= 10; ++n) {
        const RationalPolynomial& p = power_sum_polynomial(n);
        CHECK(p.degree() == n + 2);
        for (int k : {2, 5, 9}) {
            BigRat left = p.evaluate(BigRat(-k));
            BigRat right = p.evaluate(BigRat(k));
            if (n % 2 == 1) right = -right;
            CHECK(left == right);
        }
    }
}

TEST_CASE("newton coefficients for small k") {
    auto t1 = newton_coefficients(1);
    CHECK(t1.b == std::vector<BigInt>{BigInt(1), BigInt(1)});

    auto t2 = newton_coefficients(2);
    CHECK(t2.b == std::vector<BigInt>{BigInt(1), BigInt(8), BigInt(23), BigInt(28), BigInt(12)});

    auto t7 = newton_coefficients(7);
    CHECK(t7.b[1] == 343);
    CHECK(t7.b[2] == 57428);
    CHECK_THROWS_AS(newton_coefficients(0), std::invalid_argument);
}

TEST_CASE("newton prefix") {
    auto full = newton_coefficients(7);
    auto pre = newton_prefix(7, 3);
    REQUIRE(pre.size() == 4);
    for (int r = 0; r <= 3; ++r) CHECK(pre[r] == full.b[r]);
    // beyond degree the coefficients are zero
    auto padded = newton_prefix(2, 6);
    CHECK(padded[4] == 12);
    CHECK(padded[5] == 0);
    CHECK(padded[6] == 0);
}

TEST_CASE("the three table builders agree") {
    for (int k = 1; k <= 8; ++k) {
        auto a = newton_coefficients(k);
        auto b = expand_product(k);
        auto c = expand_product_serial(k);
        CHECK(a.b == b.b);
        CHECK(b.b == c.b);
        CHECK(a.c0 == b.c0);
    }
}

TEST_CASE("leading coefficient") {
    CHECK(leading_coefficient(1) == 1);
    CHECK(leading_coefficient(2) == make_rational(1, 12));
    for (int k = 1; k <= 12; ++k) {
        auto t = newton_coefficients(k);
        CHECK(t.c0 * BigRat(t.b.back()) == 1);  // P_k(0) = 1
    }
    // b_{k^2} is the product of the multiset elements
    for (int k = 1; k <= 8; ++k) {
        MomentMultiset ms(k);
        BigInt prod(1);
        for (long j = 1; j <= ms.largest(); ++j)
            prod *= pow_int(BigInt(j), static_cast<unsigned long>(ms.multiplicity(j)));
        CHECK(expand_product(k).b.back() == prod);
    }
}

TEST_CASE("coefficient access") {
    auto t2 = expand_product(2);
    CHECK(t2.coefficient(3) == make_rational(7, 3));  // 28/12
    CHECK(t2.coefficient(4) == 1);
    CHECK_THROWS_AS(t2.coefficient(5), IndexOutOfRange);
    CHECK_THROWS_AS(t2.coefficient(-1), IndexOutOfRange);
    for (int k = 1; k <= 8; ++k) CHECK(expand_product(k).coefficient(k * k) == 1);
}

TEST_CASE("polynomial evaluation") {
    for (int k = 1; k <= 12; ++k) {
        auto t = expand_product(k);
        CHECK(t.evaluate(BigRat(0)) == 1);
        CHECK(t.evaluate(BigRat(1)) == BigRat(binomial(2 * k, k)));
    }
    // rational argument vs the defining product, k = 2
    auto t2 = expand_product(2);
    BigRat n = make_rational(1, 2);
    BigRat expected = (n + 1) * (n + 2) * (n + 2) * (n + 3) * make_rational(1, 12);
    CHECK(t2.evaluate(n) == expected);
}

TEST_CASE("argmax and unimodality") {
    CHECK(expand_product(2).argmax() == std::vector<long>{3});
    CHECK(expand_product(5).argmax() == std::vector<long>{20});
    CHECK(expand_product(7).argmax() == std::vector<long>{42});

    auto p2 = expand_product(2).unimodality_peak();
    CHECK(p2.unimodal);
    CHECK(p2.peak == 3);
    auto p7 = expand_product(7).unimodality_peak();
    CHECK(p7.unimodal);
    CHECK(p7.peak == 42);
    // k=1 has the plateau {1, 1}; the scan reports the last index of the rise
    auto p1 = expand_product(1).unimodality_peak();
    CHECK(p1.unimodal);
    CHECK(p1.peak == 1);
    CHECK(expand_product(1).argmax() == std::vector<long>{0, 1});

    for (int k = 1; k <= 12; ++k) {
        auto t = expand_product(k);
        for (const auto& br : t.b) CHECK(br > 0);
        CHECK(t.unimodality_peak().unimodal);
    }
}
