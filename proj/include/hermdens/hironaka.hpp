#pragma once

#include <vector>

#include "hermdens/exact.hpp"

namespace hermdens::hironaka {

// Non-increasing tuple of non-negative integers.  Conventions:
//   conj(i)  = #{j : parts[j] >= i}            (i >= 1)
//   weight() = sum of parts                    (|a|)
//   nval()   = sum (i-1)*a_i                   (n(a), 1-based i)
//   tilde()  = every part increased by 1
struct Partition {
    std::vector<long> parts;
    Partition() = default;
    explicit Partition(std::vector<long> p);

    long conj(long i) const;
    long weight() const;
    long nval() const;
    Partition tilde() const;
    long largest() const { return parts.empty() ? 0 : parts.front(); }
    size_t length() const { return parts.size(); }
};

// T = diag(p^a, p^b) with a >= b >= 0 at an odd prime p.
struct DensityTarget {
    long a = 0, b = 0;
    long p = 0;
    DensityTarget(long a, long b, long p);
};

// [u v] built from the products prod_{i=1..u} (1 - (-p)^{-i}); 0 when v < 0
// or v > u, 1 when v = 0 or v = u.
Rational bracket(long u, long v, long p);

// I_j(mu, lambda) = sum_{i = mu'_{j+1}}^{min(tl'_{j+1}, mu'_j)}
//   (-p)^{i(2 tl'_{j+1} + 1 - i)/2} [tl'_{j+1}-mu'_{j+1}, tl'_{j+1}-i] [tl'_j-i, tl'_j-mu'_j]
// where tl = lambda with every part increased by 1.  The exponent is always
// integral (i(1-i) is even); asserted.
Rational I_j(const Partition& mu, const Partition& lambda, long p, long j);

// General density: alpha(S_xi, T_lambda) as a finite sum over partitions
// mu <= tilde(lambda), with m = length(xi) >= n = length(lambda).
Rational alpha_general(const Partition& xi, const Partition& lambda, long p);

// F(S, T; X) for S = diag(p,1): the polynomial whose value at X = (-p)^{-r}
// is alpha(S_r, T).  Assembled directly as a sum of monomials X^{c+d}.
Polynomial f_poly_nonsplit(const DensityTarget& t);

// Same polynomial by the closed form: F_eps plus a correction assembled from
// three exactly-divisible pieces, with the final division by (X - p) exact.
Polynomial f_poly_closed(const DensityTarget& t);

// F(Id_2, T; X) (self-dual S), no parity restriction.
Polynomial f_poly_nagaoka(const DensityTarget& t);

// F(S, diag(p^{a+2}, p^b); X) - F(S, diag(p^a, p^b); X) as a polynomial.
Polynomial recursion_delta_A(const DensityTarget& t);

// F(S, diag(p^{b+2}, p^{b+2}); X) - F(S, diag(p^{b+2}, p^b); X).
Polynomial recursion_delta_B(long b, long p);

// alpha'(S, T) = -dF/dX at X = 1 for the nonsplit S.
Rational alpha_prime(const DensityTarget& t);

// p/(p+1)^2 [ alpha'(S,T) + p^2/(1-p^2) * alpha(Id_2, T) ]; must agree with
// localfield::mu(a, b, p).
Rational mu_from_densities(const DensityTarget& t);

}  // namespace hermdens::hironaka
