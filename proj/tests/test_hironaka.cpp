#include "doctest.h"
#include "hermdens/hironaka.hpp"

using namespace hermdens;
using namespace hermdens::hironaka;

TEST_CASE("partition bookkeeping")
{
    Partition l({3, 1});
    CHECK(l.weight() == 4);
    CHECK(l.nval() == 1);
    CHECK(l.conj(1) == 2);
    CHECK(l.conj(2) == 1);
    CHECK(l.conj(3) == 1);
    CHECK(l.conj(4) == 0);
    CHECK(l.tilde().parts == std::vector<long>{4, 2});
    CHECK(l.largest() == 3);
    CHECK(Partition({2, 2, 1}).nval() == 4);
    CHECK_THROWS_AS(Partition({1, 2}), precondition_error);   // increasing
    CHECK_THROWS_AS(Partition({2, -1}), precondition_error);  // negative part
}

TEST_CASE("density target validation")
{
    CHECK_NOTHROW(DensityTarget(1, 0, 3));  // odd sums are fine for some consumers
    CHECK_THROWS_AS(DensityTarget(0, 1, 3), precondition_error);
    CHECK_THROWS_AS(DensityTarget(2, 0, 4), precondition_error);
    CHECK_THROWS_AS(DensityTarget(2, 0, 2), precondition_error);
    CHECK_THROWS_AS(DensityTarget(-2, -2, 3), precondition_error);
}

TEST_CASE("bracket values")
{
    CHECK(bracket(2, 1, 3) == ratio(2, 3));
    CHECK(bracket(0, 0, 3) == 1);
    CHECK(bracket(5, 0, 3) == 1);
    CHECK(bracket(5, 5, 3) == 1);
    CHECK(bracket(3, -1, 3) == 0);
    CHECK(bracket(3, 4, 3) == 0);
    // [u 1] = (1 - (-p)^{-u}) / (1 - (-p)^{-1})
    Rational expect = (Rational(1) - neg_p_pow(3, -3)) / (Rational(1) - neg_p_pow(3, -1));
    CHECK(bracket(3, 1, 3) == expect);
}

TEST_CASE("interval factor spot values")
{
    // at j equal to the larger part: (1+p^2)(1-1/p)
    CHECK(I_j(Partition({2, 1}), Partition({3, 3}), 3, 2) == ratio(20, 3));
    // at j equal to the repeated part: (1+p^2)(1-p)
    CHECK(I_j(Partition({1, 1}), Partition({2, 2}), 3, 1) == Rational(-20));
    // far beyond the support the factor is 1
    CHECK(I_j(Partition({1, 0}), Partition({2, 0}), 3, 7) == 1);
    CHECK(I_j(Partition({0, 0}), Partition({0, 0}), 5, 1) == 1);
}

TEST_CASE("general density anchors")
{
    for (long p : {3L, 5L, 7L}) {
        Rational expect = ratio((p + 1) * (p + 1), p);
        CHECK(alpha_general(Partition({1, 0}), Partition({1, 0}), p) == expect);
    }
    // unimodular S against a target of odd total valuation at the matching rank
    CHECK(alpha_general(Partition({0, 0}), Partition({1, 0}), 3) == 0);
    CHECK_THROWS_AS(alpha_general(Partition({1}), Partition({1, 0}), 3), precondition_error);
}

TEST_CASE("series polynomial matches hand-expanded cases")
{
    // (1-X)(X+p)/p
    Polynomial f00 = f_poly_nonsplit(DensityTarget(0, 0, 3));
    CHECK(f00 == Polynomial({Rational(1), ratio(-2, 3), ratio(-1, 3)}));

    // (1-X)(X+3)(X^2+3X+1)/3
    Polynomial f20 = f_poly_nonsplit(DensityTarget(2, 0, 3));
    CHECK(f20 ==
          Polynomial({Rational(1), ratio(7, 3), ratio(-4, 3), ratio(-5, 3), ratio(-1, 3)}));

    CHECK_THROWS_AS(f_poly_nonsplit(DensityTarget(1, 0, 3)), precondition_error);
    CHECK_THROWS_AS(f_poly_closed(DensityTarget(1, 0, 3)), precondition_error);
}

TEST_CASE("closed form equals the sum on sample targets")
{
    for (auto [a, b, p] : {std::tuple<long, long, long>{2, 0, 3}, {4, 2, 5}, {3, 1, 7}, {6, 6, 3}}) {
        DensityTarget t(a, b, p);
        CHECK(f_poly_nonsplit(t) == f_poly_closed(t));
    }
}

TEST_CASE("unimodular polynomial basics")
{
    // a = b = 0: the double sum collapses to (1 + X/p)(1 - X/p^2)
    Polynomial f = f_poly_nagaoka(DensityTarget(0, 0, 3));
    CHECK(f == Polynomial({Rational(1), ratio(2, 9), ratio(-1, 27)}));
    CHECK(f.eval(Rational(1)) == ratio(32, 27));

    // no parity restriction
    CHECK_NOTHROW(f_poly_nagaoka(DensityTarget(1, 0, 3)));
}

TEST_CASE("unimodular polynomial interpolates odd-parity targets")
{
    // the closed series has no parity restriction; check it against the
    // defining partition sum on targets of odd total valuation as well
    for (long p : {3L, 5L})
        for (long r = 0; r <= 2; ++r)
            for (long b = 0; b <= 3; ++b)
                for (long a = b; a <= 4; ++a) {
                    if ((a + b) % 2 == 0) continue;
                    Polynomial F = f_poly_nagaoka(DensityTarget(a, b, p));
                    Rational x = pow_rational(Rational(-p), -r);
                    std::vector<long> parts(static_cast<size_t>(r) + 2, 0);
                    Rational direct = alpha_general(Partition(parts), Partition({a, b}), p);
                    CHECK(F.eval(x) == direct);
                }
}

TEST_CASE("recursion deltas match polynomial differences on samples")
{
    for (long p : {3L, 5L}) {
        DensityTarget t(4, 2, p);
        Polynomial diff =
            f_poly_nonsplit(DensityTarget(6, 2, p)) - f_poly_nonsplit(DensityTarget(4, 2, p));
        CHECK(recursion_delta_A(t) == diff);
        Polynomial diffB =
            f_poly_nonsplit(DensityTarget(3, 3, p)) - f_poly_nonsplit(DensityTarget(3, 1, p));
        CHECK(recursion_delta_B(1, p) == diffB);
    }
}

TEST_CASE("derivative identity at the hand-worked point")
{
    DensityTarget t(2, 0, 3);
    CHECK(alpha_prime(t) == ratio(20, 3));
    CHECK(mu_from_densities(t) == 1);
    CHECK(mu_from_densities(DensityTarget(0, 0, 5)) == 0);
}
