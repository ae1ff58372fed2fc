#pragma once

#include <vector>

#include "hermdens/exact.hpp"

namespace hermdens::localfield {

// Residue ring of the unramified quadratic extension at an odd prime p:
// (o/p^k) = (Z/p^k)[delta] with delta^2 = eps, eps a quadratic non-residue
// mod p.  For odd p a non-residue mod p stays a non-residue mod p^k, so no
// lifting is needed (checked at construction, not assumed).
struct InertLocalRing {
    long p = 0;
    int k = 0;
    long eps = 0;
    long long pk = 0;  // p^k

    InertLocalRing(long p, int k);            // eps = smallest positive non-residue
    InertLocalRing(long p, int k, long eps);  // explicit non-residue
};

// a + b*delta with 0 <= a,b < p^k.
struct ResidueRingElem {
    long long a = 0, b = 0;
    bool operator==(const ResidueRingElem& o) const { return a == o.a && b == o.b; }
};

ResidueRingElem reduce(const InertLocalRing& R, long long a, long long b);
ResidueRingElem add(const InertLocalRing& R, ResidueRingElem x, ResidueRingElem y);
ResidueRingElem sub(const InertLocalRing& R, ResidueRingElem x, ResidueRingElem y);
ResidueRingElem mul(const InertLocalRing& R, ResidueRingElem x, ResidueRingElem y);
ResidueRingElem conj(const InertLocalRing& R, ResidueRingElem x);
long long norm(const InertLocalRing& R, ResidueRingElem x);  // a^2 - eps b^2 mod p^k

long smallest_nonresidue(long p);
bool is_prime_ll(long long n);

// S = diag(p^{e_1},...,p^{e_m}).
struct LocalHermitianSpec {
    std::vector<long> diag_exponents;
    LocalHermitianSpec() = default;
    explicit LocalHermitianSpec(std::vector<long> exps);
    size_t rank() const { return diag_exponents.size(); }
};

// mu_p(T) = (a+b)/2 - p(p^b - 1)/(p-1) for T ~ diag(p^a, p^b), a >= b >= 0,
// a+b even.  Always an integer under the precondition.
Int mu(long a, long b, long p);

}  // namespace hermdens::localfield
