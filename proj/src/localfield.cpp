#include "hermdens/localfield.hpp"

namespace hermdens::localfield {

namespace {

long long mod_pos(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

int legendre(long long a, long long p) {
    Int A(static_cast<long>(a)), P(static_cast<long>(p));
    return mpz_legendre(A.get_mpz_t(), P.get_mpz_t());
}

// Keep p^k small enough that (p^k)^2 fits comfortably in 64-bit arithmetic.
constexpr long long kMaxModulus = 1LL << 31;

long long checked_pow(long p, int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) {
        v *= p;
        require(v < kMaxModulus, "p^k too large for ring arithmetic");
    }
    return v;
}

long default_eps(long p) {
    require(is_prime_ll(p) && p != 2, "p must be an odd prime");
    return smallest_nonresidue(p);
}

}  // namespace

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

long smallest_nonresidue(long p) {
    for (long e = 2; e < p; ++e)
        if (legendre(e, p) == -1) return e;
    throw precondition_error("no quadratic non-residue found (p must be an odd prime)");
}

InertLocalRing::InertLocalRing(long p_, int k_) : InertLocalRing(p_, k_, default_eps(p_)) {}

InertLocalRing::InertLocalRing(long p_, int k_, long eps_) : p(p_), k(k_), eps(eps_) {
    require(is_prime_ll(p) && p != 2, "p must be an odd prime");
    require(k >= 1, "precision k must be >= 1");
    require(1 <= eps && eps < p, "eps must satisfy 1 <= eps < p");
    require(legendre(eps, p) == -1, "eps must be a quadratic non-residue mod p");
    pk = checked_pow(p, k);
}

ResidueRingElem reduce(const InertLocalRing& R, long long a, long long b) {
    return {mod_pos(a, R.pk), mod_pos(b, R.pk)};
}

ResidueRingElem add(const InertLocalRing& R, ResidueRingElem x, ResidueRingElem y) {
    return {(x.a + y.a) % R.pk, (x.b + y.b) % R.pk};
}

ResidueRingElem sub(const InertLocalRing& R, ResidueRingElem x, ResidueRingElem y) {
    return reduce(R, x.a - y.a, x.b - y.b);
}

ResidueRingElem mul(const InertLocalRing& R, ResidueRingElem x, ResidueRingElem y) {
    // (a1 + b1 d)(a2 + b2 d) = (a1 a2 + eps b1 b2) + (a1 b2 + a2 b1) d
    long long re = (x.a * y.a % R.pk + R.eps * x.b % R.pk * y.b % R.pk) % R.pk;
    long long im = (x.a * y.b % R.pk + x.b * y.a % R.pk) % R.pk;
    return {re, im};
}

ResidueRingElem conj(const InertLocalRing& R, ResidueRingElem x) {
    return reduce(R, x.a, -x.b);
}

long long norm(const InertLocalRing& R, ResidueRingElem x) {
    return mod_pos(x.a * x.a % R.pk - R.eps * x.b % R.pk * x.b % R.pk, R.pk);
}

LocalHermitianSpec::LocalHermitianSpec(std::vector<long> exps) : diag_exponents(std::move(exps)) {
    require(!diag_exponents.empty(), "S must have at least one diagonal entry");
    for (long e : diag_exponents) require(e >= 0, "S diagonal exponents must be >= 0");
}

Int mu(long a, long b, long p) {
    require(is_prime_ll(p) && p != 2, "p must be an odd prime");
    require(a >= b && b >= 0, "need a >= b >= 0");
    require((a + b) % 2 == 0, "a+b must be even");
    Int P(p);
    // geometric sum (p^b - 1)/(p - 1) = 1 + p + ... + p^{b-1}
    Int num = pow_int(P, static_cast<unsigned long>(b)) - 1;
    Int geom;
    mpz_divexact(geom.get_mpz_t(), num.get_mpz_t(), Int(P - 1).get_mpz_t());
    return Int((a + b) / 2) - P * geom;
}

}  // namespace hermdens::localfield
