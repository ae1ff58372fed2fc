#include "doctest.h"
#include "hermdens/exact.hpp"

using namespace hermdens;

TEST_CASE("rationals are canonical")
{
    CHECK(ratio(4, 6) == ratio(2, 3));
    CHECK(ratio(1, -2) == ratio(-1, 2));
    CHECK(to_string(ratio(1, -2)) == "-1/2");
    CHECK(to_string(ratio(6, 3)) == "2");
    CHECK_THROWS_AS(ratio(1, 0), precondition_error);
}

TEST_CASE("rational parsing")
{
    CHECK(rational_from_string("-7/3") == ratio(-7, 3));
    CHECK(rational_from_string("5") == Rational(5));
    CHECK(rational_from_string("4/6") == ratio(2, 3));
    CHECK_THROWS_AS(rational_from_string("1/0"), precondition_error);
    CHECK_THROWS_AS(rational_from_string("x"), precondition_error);
    CHECK_THROWS_AS(rational_from_string(""), precondition_error);
}

TEST_CASE("integer and rational powers")
{
    CHECK(pow_int(3, 4) == 81);
    CHECK(pow_int(-2, 3) == -8);
    CHECK(pow_rational(ratio(2, 3), 2) == ratio(4, 9));
    CHECK(pow_rational(ratio(2, 3), -2) == ratio(9, 4));
    CHECK(pow_rational(Rational(5), 0) == 1);
    CHECK_THROWS_AS(pow_rational(Rational(0), -1), precondition_error);
    CHECK(neg_p_pow(3, 2) == 9);
    CHECK(neg_p_pow(3, 3) == -27);
    CHECK(neg_p_pow(3, -1) == ratio(-1, 3));
    CHECK(neg_p_pow(3, -2) == ratio(1, 9));
}

TEST_CASE("polynomial arithmetic and canonical form")
{
    Polynomial x = Polynomial::xpow(1);
    Polynomial one = Polynomial::constant(Rational(1));
    Polynomial p = (x - one) * (x + one);
    CHECK(p == Polynomial({Rational(-1), Rational(0), Rational(1)}));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(5) == 0);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);

    CHECK(p.eval(Rational(3)) == 8);
    CHECK(p.eval(ratio(1, 2)) == ratio(-3, 4));
    CHECK(p.derivative() == Polynomial({Rational(0), Rational(2)}));
    CHECK(Polynomial().derivative().is_zero());

    Polynomial q = ratio(1, 3) * p;
    CHECK(q.coeff(2) == ratio(1, 3));
    CHECK(-q == Polynomial({ratio(1, 3), Rational(0), ratio(-1, 3)}));
}

TEST_CASE("exact polynomial division")
{
    Polynomial x = Polynomial::xpow(1);
    Polynomial one = Polynomial::constant(Rational(1));
    Polynomial num = (x - one) * (x + one) * (ratio(1, 7) * x + one);
    CHECK(div_exact(num, x - one) == (x + one) * (ratio(1, 7) * x + one));
    CHECK(div_exact(num, num) == one);
    CHECK(div_exact(Polynomial(), x) == Polynomial());
    CHECK_THROWS_AS(div_exact(x + one, x - one), inexact_division_error);
    CHECK_THROWS_AS(div_exact(x, Polynomial()), precondition_error);
}

TEST_CASE("coefficient serialization round trips")
{
    Polynomial p({ratio(1, 3), Rational(-2), Rational(0), Rational(5)});
    auto s = coeff_strings(p);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == "1/3");
    CHECK(s[1] == "-2");
    CHECK(polynomial_from_strings(s) == p);
    CHECK(polynomial_from_strings({}).is_zero());
}
