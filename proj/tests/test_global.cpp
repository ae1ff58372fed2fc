#include <random>

#include "doctest.h"
#include "hermdens/global.hpp"

using namespace hermdens;
using namespace hermdens::global;

TEST_CASE("fundamental discriminant validation")
{
    CHECK_NOTHROW(QuadField(Int(-3)));
    CHECK_NOTHROW(QuadField(Int(-4)));
    CHECK_NOTHROW(QuadField(Int(-8)));
    CHECK_NOTHROW(QuadField(Int(-15)));
    CHECK_NOTHROW(QuadField(Int(-23)));
    CHECK_THROWS_AS(QuadField(Int(5)), precondition_error);    // positive
    CHECK_THROWS_AS(QuadField(Int(-5)), precondition_error);   // 3 mod 4
    CHECK_THROWS_AS(QuadField(Int(-9)), precondition_error);   // square factor
    CHECK_THROWS_AS(QuadField(Int(-12)), precondition_error);  // -12/4 = -3 is 1 mod 4
    CHECK_THROWS_AS(QuadField(Int(-16)), precondition_error);
    CHECK_THROWS_AS(QuadField(Int(-75)), precondition_error);  // 25 divides
}

TEST_CASE("ring element arithmetic")
{
    QuadField F(Int(-4));  // omega = -2 + i
    FieldElem w(Rational(0), Rational(1));
    CHECK(norm(F, w) == 5);
    CHECK(trace(F, w) == -4);
    FieldElem w2 = mul(F, w, w);
    // omega^2 = disc*omega - (disc^2-disc)/4 = -4 omega - 5
    CHECK(w2 == FieldElem(Rational(-5), Rational(-4)));
    FieldElem u(Rational(3), Rational(-2));
    CHECK(mul(F, u, conj(F, u)) == FieldElem(norm(F, u), Rational(0)));
    CHECK(add(u, sub(u, u)) == u);
    CHECK(norm(F, mul(F, u, w)) == norm(F, u) * norm(F, w));
    CHECK(trace(F, add(u, w)) == trace(F, u) + trace(F, w));
}

TEST_CASE("matrix construction and positivity")
{
    QuadField F(Int(-4));
    GlobalHermitianMatrix T(F, 2, 3, FieldElem(Rational(1), Rational(0)));
    CHECK(T.det_value == 5);
    CHECK(T.positive_definite());
    GlobalHermitianMatrix neg(F, 1, 1, FieldElem(Rational(2), Rational(0)));
    CHECK(neg.det_value == -3);
    CHECK_FALSE(neg.positive_definite());
    CHECK_THROWS_AS(GlobalHermitianMatrix(F, 1, 1, FieldElem(ratio(1, 2), Rational(0))),
                    precondition_error);  // non-integral entry
}

TEST_CASE("prime classification")
{
    QuadField F(Int(-4));
    CHECK(classify_prime(F, 2) == SplitType::ramified);
    CHECK(classify_prime(F, 3) == SplitType::inert);
    CHECK(classify_prime(F, 5) == SplitType::split);
    CHECK(classify_prime(F, 7) == SplitType::inert);
    CHECK(classify_prime(F, 13) == SplitType::split);
    QuadField F3(Int(-3));
    CHECK(classify_prime(F3, 2) == SplitType::inert);  // -3 is 5 mod 8
    CHECK(classify_prime(F3, 3) == SplitType::ramified);
    CHECK(classify_prime(F3, 7) == SplitType::split);
    CHECK_THROWS_AS(classify_prime(F, 6), precondition_error);
    CHECK(to_string(SplitType::inert) == "inert");
}

TEST_CASE("level structure accepts only inert squarefree products")
{
    QuadField F(Int(-4));
    CHECK_NOTHROW(LevelStructure(F, 1));
    CHECK_NOTHROW(LevelStructure(F, 21));  // 3 * 7, both inert
    CHECK_THROWS_AS(LevelStructure(F, 9), precondition_error);   // square
    CHECK_THROWS_AS(LevelStructure(F, 5), precondition_error);   // split
    CHECK_THROWS_AS(LevelStructure(F, 2), precondition_error);   // ramified
    CHECK_THROWS_AS(LevelStructure(F, 0), precondition_error);
}

TEST_CASE("valuations of rationals")
{
    CHECK(ord_at(Rational(18), 3) == 2);
    CHECK(ord_at(ratio(5, 27), 3) == -3);
    CHECK(ord_at(ratio(-12, 7), 2) == 2);
    CHECK_THROWS_AS(ord_at(Rational(0), 3), precondition_error);
}

TEST_CASE("hilbert symbol known values")
{
    auto inf = Place::at_infinity();
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), inf) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(2), inf) == 1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), Place::finite(2)) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), Place::finite(3)) == 1);
    CHECK(hilbert_symbol(Rational(2), Rational(3), Place::finite(3)) == -1);
    CHECK(hilbert_symbol(Rational(2), Rational(3), Place::finite(2)) == -1);
    CHECK(hilbert_symbol(Rational(5), Rational(7), Place::finite(11)) == 1);  // both units
    // squares are always split
    CHECK(hilbert_symbol(Rational(4), ratio(-7, 9), Place::finite(2)) == 1);
    CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), inf), precondition_error);
}

TEST_CASE("hilbert symbol symmetry, bimultiplicativity, and the product formula")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(-30, 30);
    auto draw = [&]() {
        long v = 0;
        while (v == 0) v = pick(rng);
        return v;
    };
    for (int trial = 0; trial < 60; ++trial) {
        Rational a(draw()), b(draw()), c(draw());
        for (const Int& p : {Int(2), Int(3), Int(5), Int(7)}) {
            auto v = Place::finite(p);
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a * c, b, v) ==
                  hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v));
        }
        int prod = hilbert_symbol(a, b, Place::at_infinity());
        for (const auto& [q, e] :
             factorize(abs(2 * a.get_num() * b.get_num())))
            prod *= hilbert_symbol(a, b, Place::finite(q));
        CHECK(prod == 1);
    }
}

TEST_CASE("invariant of the hermitian space")
{
    QuadField F(Int(-4));
    // V of determinant 3 at the inert prime 3: (3, -4)_3 = (-4|3) = -1
    CHECK(inv_V(Rational(3), F, Place::finite(3)) == -1);
    CHECK(inv_V(Rational(1), F, Place::finite(3)) == 1);
    CHECK(inv_V(Rational(3), F, Place::at_infinity()) == 1);
}

TEST_CASE("localization at an inert prime")
{
    QuadField F(Int(-4));
    {
        GlobalHermitianMatrix T(F, 3, 1, FieldElem());
        auto [a, b] = localize(F, T, 3);
        CHECK(a == 1);
        CHECK(b == 0);
    }
    {
        GlobalHermitianMatrix T(F, 9, 3, FieldElem());
        auto [a, b] = localize(F, T, 3);
        CHECK(a == 2);
        CHECK(b == 1);
    }
    {
        // off-diagonal with unit norm forces b = 0: N(1 + omega) = 2
        GlobalHermitianMatrix T(F, 3, 3, FieldElem(Rational(1), Rational(1)));
        auto [a, b] = localize(F, T, 3);
        CHECK(b == 0);
        CHECK(a == ord_at(Rational(T.det_value), 3));
    }
    {
        // off-diagonal entry 3(1 + omega) of norm 18 sets the minimum: b = 1
        GlobalHermitianMatrix T(F, 9, 9, FieldElem(Rational(3), Rational(3)));
        CHECK(T.det_value == 63);
        auto [a, b] = localize(F, T, 3);
        CHECK(a == 1);
        CHECK(b == 1);
    }
    GlobalHermitianMatrix T(F, 3, 1, FieldElem());
    CHECK_THROWS_AS(localize(F, T, 5), precondition_error);  // split prime
    CHECK_THROWS_AS(localize(F, T, 2), precondition_error);  // even
    GlobalHermitianMatrix sing(F, 1, 4, FieldElem(Rational(2), Rational(0)));
    CHECK(sing.det_value == 0);
    CHECK_THROWS_AS(localize(F, sing, 3), precondition_error);
}

TEST_CASE("localization exponents sum to the determinant valuation")
{
    QuadField F(Int(-4));
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> pick(-6, 6);
    int kept = 0;
    while (kept < 40) {
        long t1 = pick(rng), t2 = pick(rng), x = pick(rng), y = pick(rng);
        if (t1 <= 0 || t2 <= 0) continue;
        GlobalHermitianMatrix T(F, t1, t2, FieldElem(Rational(x), Rational(y)));
        if (T.det_value == 0) continue;
        ++kept;
        for (long p : {3L, 7L, 11L}) {
            auto [a, b] = localize(F, T, p);
            CHECK(a + b == ord_at(Rational(T.det_value), p));
            CHECK(a >= b);
            CHECK(b >= 0);
        }
    }
}

TEST_CASE("diff sets")
{
    QuadField F(Int(-4));
    LevelStructure one(F, 1);
    {
        // det = 3, inert with odd valuation
        GlobalHermitianMatrix T(F, 3, 1, FieldElem());
        auto d = diff_set(F, one, T);
        REQUIRE(d.size() == 1u);
        CHECK(d[0] == 3);
    }
    {
        // det = 9: even valuation everywhere, empty away from the level
        GlobalHermitianMatrix T(F, 9, 1, FieldElem());
        CHECK(diff_set(F, one, T).empty());
        // a level prime enters exactly when its valuation in det is even
        LevelStructure l3(F, 3);
        auto d = diff_set(F, l3, T);
        REQUIRE(d.size() == 1u);
        CHECK(d[0] == 3);
        LevelStructure l7(F, 7);
        auto d7 = diff_set(F, l7, T);
        REQUIRE(d7.size() == 1u);
        CHECK(d7[0] == 7);
    }
    {
        // at the level the parity flips: odd valuation there drops out
        GlobalHermitianMatrix T(F, 3, 1, FieldElem());
        LevelStructure l3(F, 3);
        CHECK(diff_set(F, l3, T).empty());
    }
    {
        // split primes never enter: det = 5
        GlobalHermitianMatrix T(F, 5, 1, FieldElem());
        CHECK(diff_set(F, one, T).empty());
    }
    GlobalHermitianMatrix sing(F, 1, 4, FieldElem(Rational(2), Rational(0)));
    CHECK_THROWS_AS(diff_set(F, one, sing), precondition_error);
    GlobalHermitianMatrix indef(F, 1, 1, FieldElem(Rational(2), Rational(0)));
    CHECK_THROWS_AS(diff_set(F, one, indef), precondition_error);
}

TEST_CASE("diff membership matches the hilbert symbol criterion")
{
    // for inert l away from the level: l lies in the set exactly when the
    // invariant (det T, disc)_l is -1
    QuadField F(Int(-4));
    LevelStructure one(F, 1);
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> pick(-5, 5);
    int kept = 0;
    while (kept < 30) {
        long t1 = pick(rng), t2 = pick(rng), x = pick(rng), y = pick(rng);
        if (t1 <= 0) continue;
        GlobalHermitianMatrix T(F, t1, t2, FieldElem(Rational(x), Rational(y)));
        if (!T.positive_definite()) continue;
        ++kept;
        auto d = diff_set(F, one, T);
        for (long l : {3L, 7L, 11L, 19L, 23L}) {
            bool in_set = false;
            for (const auto& q : d) in_set = in_set || q == l;
            bool anisotropic =
                hilbert_symbol(Rational(T.det_value), Rational(F.disc), Place::finite(l)) == -1;
            CHECK(in_set == anisotropic);
        }
    }
}

TEST_CASE("class numbers and unit orders")
{
    auto check = [](long disc, long h, int w) {
        auto [hh, ww] = class_number(QuadField(Int(disc)));
        CHECK(hh == h);
        CHECK(ww == w);
    };
    check(-3, 1, 6);
    check(-4, 1, 4);
    check(-7, 1, 2);
    check(-8, 1, 2);
    check(-15, 2, 2);
    check(-20, 2, 2);
    check(-23, 3, 2);
    check(-47, 5, 2);
}

TEST_CASE("whittaker shell normalization")
{
    QuadField F(Int(-4));
    localfield::LocalHermitianSpec S({1, 0});
    auto w = whittaker_shell(F, 2, 0, 3, S, ratio(16, 3));
    CHECK(w.value == ratio(16, 27));
    CHECK(w.exponent_e == ratio(5, 2));
    CHECK(w.gamma == "gamma^2");
    CHECK(whittaker_shell(F, 2, 0, 3, S, Rational(0)).value == 0);
    // r enters only through the exponent
    CHECK(whittaker_shell(F, 2, 3, 3, S, Rational(1)).exponent_e == ratio(2 * 17, 4));
    CHECK_THROWS_AS(whittaker_shell(F, 2, 0, 2, S, Rational(1)), precondition_error);  // ramified
    CHECK_THROWS_AS(whittaker_shell(F, 2, 0, 5, S, Rational(1)), precondition_error);  // split
    CHECK_THROWS_AS(whittaker_shell(F, 1, 0, 3, S, Rational(1)), precondition_error);  // rank
}

TEST_CASE("whittaker derivative factor")
{
    CHECK(whittaker_derivative_factor(2, 0, 3) == ratio(16, 27));
    CHECK(whittaker_derivative_factor(0, 0, 3) == 0);
    CHECK(whittaker_derivative_factor(2, 2, 3) == ratio(-160, 27));
    CHECK_THROWS_AS(whittaker_derivative_factor(1, 0, 3), precondition_error);
}

TEST_CASE("lattice representation counts")
{
    QuadField F(Int(-4));
    GlobalHermitianMatrix id(F, 1, 1, FieldElem());
    CHECK(count_lattice_reps(F, id, id) == 32);
    // norm 3 splits as 1 + 2 across the two coordinates: 32 vectors, each
    // with 4 orthogonal completions of the same norm
    GlobalHermitianMatrix t33(F, 3, 3, FieldElem());
    CHECK(count_lattice_reps(F, id, t33) == 128);
    // but orthogonality to a norm-1 vector pins the second vector to one
    // coordinate, where 3 is not a norm
    GlobalHermitianMatrix t13(F, 1, 3, FieldElem());
    CHECK(count_lattice_reps(F, id, t13) == 0);
    // diag(1,2): 8 norm-1 vectors, each with 4 orthogonal norm-2 completions
    GlobalHermitianMatrix t12(F, 1, 2, FieldElem());
    CHECK(count_lattice_reps(F, id, t12) == 32);
    CHECK_THROWS_AS(count_lattice_reps(F, id, GlobalHermitianMatrix(F, 1, 1, FieldElem(Rational(2), Rational(0)))),
                    precondition_error);
}

TEST_CASE("representation count is basis independent")
{
    QuadField F(Int(-4));
    GlobalHermitianMatrix id(F, 1, 1, FieldElem());
    // basis change (e1, e2) -> (e1, e1 + e2): Gram becomes ((1, 1), (1, 2))
    GlobalHermitianMatrix sheared(F, 1, 2, FieldElem(Rational(1), Rational(0)));
    GlobalHermitianMatrix t12(F, 1, 2, FieldElem());
    CHECK(count_lattice_reps(F, sheared, id) == 32);
    CHECK(count_lattice_reps(F, sheared, t12) == count_lattice_reps(F, id, t12));
    // (e1, e2) -> (e1, omega e1 + e2) with omega of norm 5: Gram ((1, omega), (omega', 6))
    GlobalHermitianMatrix wshear(F, 1, 6, FieldElem(Rational(0), Rational(1)));
    CHECK(wshear.det_value == 1);
    CHECK(count_lattice_reps(F, wshear, id) == 32);
    // a non-unit scaling is a proper sublattice, not a basis change: diag(5,1)
    // cannot represent 1 in its first slot at all
    GlobalHermitianMatrix scaled(F, 5, 1, FieldElem());
    CHECK(count_lattice_reps(F, scaled, id) == 0);
}

TEST_CASE("factorization helper")
{
    auto f = factorize(360);
    REQUIRE(f.size() == 3u);
    CHECK(f[0].first == 2);
    CHECK(f[0].second == 3u);
    CHECK(f[1].first == 3);
    CHECK(f[1].second == 2u);
    CHECK(f[2].first == 5);
    CHECK(f[2].second == 1u);
    CHECK(factorize(1).empty());
    CHECK_THROWS_AS(factorize(0), precondition_error);
}
