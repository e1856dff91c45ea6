#include <momentpoly/series.hpp>

#include <doctest.h>

using namespace momentpoly;

TEST_CASE("polynomial printing") {
    RationalPolynomial zero;
    CHECK(zero.to_string() == "0");
    CHECK(RationalPolynomial(1).to_string() == "1");
    RationalPolynomial p({make_rational(-1, 2), BigRat(0), BigRat(3)}, "r");
    CHECK(p.to_string() == "-1/2 + 3*r^2");
    RationalPolynomial q({BigRat(0), make_rational(7, 12), make_rational(-7, 12)}, "r");
    CHECK(q.to_string() == "7/12*r - 7/12*r^2");
}

TEST_CASE("polynomial compose and evaluate") {
    RationalPolynomial x2({BigRat(0), BigRat(0), BigRat(1)}, "x");  // x^2
    RationalPolynomial lin({BigRat(1), BigRat(2)}, "k");            // 1 + 2k
    RationalPolynomial out = x2.compose(lin);                       // (1+2k)^2
    CHECK(out == RationalPolynomial({BigRat(1), BigRat(4), BigRat(4)}, "k"));
    CHECK(out.evaluate(BigRat(3)) == 49);
}

TEST_CASE("exact polynomial division") {
    RationalPolynomial r({BigRat(0), BigRat(1)}, "r");
    RationalPolynomial rm1({BigRat(-1), BigRat(1)}, "r");
    RationalPolynomial prod = r * rm1 * RationalPolynomial(make_rational(26, 144));
    RationalPolynomial quot;
    REQUIRE(prod.try_divide(r, &quot));
    CHECK(quot == rm1 * RationalPolynomial(make_rational(26, 144)));
    CHECK_FALSE(prod.try_divide(RationalPolynomial({BigRat(-2), BigRat(1)}, "r"), nullptr));
    CHECK_THROWS_AS(prod.divide_exact(RationalPolynomial({BigRat(-2), BigRat(1)}, "r")),
                    std::domain_error);
}

TEST_CASE("series reciprocal, log, exp") {
    // a = 1 + x + x^2/2 + ... (truncated exp)
    const int J = 8;
    RationalSeries a(J);
    BigRat fact(1);
    for (int n = 0; n <= J; ++n) {
        if (n > 0) fact *= n;
        a[n] = 1 / fact;
    }
    RationalSeries inv = reciprocal(a);
    RationalSeries prod = a * inv;
    CHECK(prod[0] == 1);
    for (int n = 1; n <= J; ++n) CHECK(prod[n] == 0);

    // log of the truncated exp is x exactly up to the truncation order
    RationalSeries lg = series_log(a);
    CHECK(lg[1] == 1);
    for (int n = 2; n <= J; ++n) CHECK(lg[n] == 0);

    // and exp(log(s)) round-trips for a generic series
    RationalSeries s(J);
    s[0] = 1;
    s[1] = make_rational(3, 7);
    s[2] = make_rational(-2, 5);
    s[3] = 4;
    s[5] = make_rational(1, 11);
    RationalSeries back = series_exp(series_log(s));
    CHECK(back == s);
}

TEST_CASE("series guards") {
    RationalSeries s(3);
    CHECK_THROWS_AS(series_log(s), std::domain_error);        // constant term 0, not 1
    s[0] = 1;
    CHECK_THROWS_AS(series_exp(s), std::domain_error);        // constant term 1, not 0
    RationalSeries t(4);
    CHECK_THROWS_AS((void)(s + t), std::invalid_argument);    // order mismatch
    RationalSeries z(3);
    CHECK_THROWS_AS(reciprocal(z), std::domain_error);
}

TEST_CASE("series shift") {
    RationalSeries s(3);
    s[0] = 1;
    s[1] = 2;
    RationalSeries sh = s.shift(2);
    CHECK(sh[0] == 0);
    CHECK(sh[2] == 1);
    CHECK(sh[3] == 2);
}
