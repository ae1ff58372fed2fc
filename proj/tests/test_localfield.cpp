#include <map>

#include "doctest.h"
#include "hermdens/localfield.hpp"

using namespace hermdens;
using namespace hermdens::localfield;

TEST_CASE("smallest non-residues")
{
    CHECK(smallest_nonresidue(3) == 2);
    CHECK(smallest_nonresidue(5) == 2);
    CHECK(smallest_nonresidue(7) == 3);
    CHECK(smallest_nonresidue(11) == 2);
}

TEST_CASE("ring construction guards")
{
    InertLocalRing R(3, 2);
    CHECK(R.pk == 9);
    CHECK(R.eps == 2);
    CHECK_THROWS_AS(InertLocalRing(2, 1), precondition_error);   // even prime
    CHECK_THROWS_AS(InertLocalRing(9, 1), precondition_error);   // not prime
    CHECK_THROWS_AS(InertLocalRing(3, 0), precondition_error);   // no precision
    CHECK_THROWS_AS(InertLocalRing(3, 1, 1), precondition_error);  // 1 is a square
    CHECK_THROWS_AS(InertLocalRing(3, 1, 4), precondition_error);  // 4 is a square
    CHECK_THROWS_AS(InertLocalRing(3, 25), precondition_error);  // modulus too large
}

TEST_CASE("quadratic extension arithmetic")
{
    InertLocalRing R(7, 2);  // delta^2 = 3, modulus 49
    ResidueRingElem delta = reduce(R, 0, 1);
    CHECK(mul(R, delta, delta) == reduce(R, R.eps, 0));

    ResidueRingElem x = reduce(R, 5, 13);
    ResidueRingElem y = reduce(R, -4, 22);
    // conjugation is a ring automorphism fixing the base
    CHECK(conj(R, mul(R, x, y)) == mul(R, conj(R, x), conj(R, y)));
    CHECK(conj(R, add(R, x, y)) == add(R, conj(R, x), conj(R, y)));
    CHECK(conj(R, conj(R, x)) == x);
    // norms are multiplicative and conjugation-invariant
    CHECK(norm(R, mul(R, x, y)) == (norm(R, x) * norm(R, y)) % R.pk);
    CHECK(norm(R, conj(R, x)) == norm(R, x));
    CHECK(mul(R, x, conj(R, x)) == reduce(R, norm(R, x), 0));
    CHECK(sub(R, x, x) == reduce(R, 0, 0));
}

TEST_CASE("unit count and norm fibers by exhaustion")
{
    for (int k = 1; k <= 2; ++k) {
        InertLocalRing R(3, k);
        long long pk = R.pk;
        long long units = 0;
        std::map<long long, long long> fiber;
        for (long long a = 0; a < pk; ++a)
            for (long long b = 0; b < pk; ++b) {
                long long n = norm(R, reduce(R, a, b));
                if (n % 3 != 0) {
                    ++units;
                    ++fiber[n];
                }
            }
        // p^{2k} - p^{2k-2} units
        long long expected_units = pk * pk - (pk / 3) * (pk / 3);
        CHECK(units == expected_units);
        // the norm maps onto the units of Z/p^k with fibers p^{k-1}(p+1)
        long long base_units = pk - pk / 3;
        CHECK(static_cast<long long>(fiber.size()) == base_units);
        long long expected_fiber = (k == 1 ? 1 : 3) * 4;
        for (const auto& [value, count] : fiber) CHECK(count == expected_fiber);
    }
}

TEST_CASE("diagonal spec validation")
{
    LocalHermitianSpec s({2, 1, 0});
    CHECK(s.rank() == 3u);
    CHECK_THROWS_AS(LocalHermitianSpec({-1}), precondition_error);
    CHECK(LocalHermitianSpec({0}).rank() == 1u);
}

TEST_CASE("closed-form intersection invariant")
{
    CHECK(mu(0, 0, 3) == 0);
    CHECK(mu(2, 0, 3) == 1);
    CHECK(mu(1, 1, 3) == -2);
    CHECK(mu(2, 2, 3) == -10);
    CHECK(mu(4, 2, 5) == -27);  // 3 - 5*6
    CHECK(mu(2, 0, 7) == 1);
    CHECK_THROWS_AS(mu(1, 0, 3), precondition_error);   // odd sum
    CHECK_THROWS_AS(mu(0, 2, 3), precondition_error);   // a < b
    CHECK_THROWS_AS(mu(-2, 0, 3), precondition_error);  // negative
    CHECK_THROWS_AS(mu(2, 0, 4), precondition_error);   // composite p
}
