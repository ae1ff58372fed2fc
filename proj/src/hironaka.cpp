#include "hermdens/hironaka.hpp"

#include <algorithm>

#include "hermdens/localfield.hpp"

namespace hermdens::hironaka {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 0, "partition parts must be >= 0");
        require(i == 0 || parts[i - 1] >= parts[i], "partition parts must be non-increasing");
    }
}

long Partition::conj(long i) const {
    long c = 0;
    for (long part : parts)
        if (part >= i) ++c;
    return c;
}

long Partition::weight() const {
    long s = 0;
    for (long part : parts) s += part;
    return s;
}

long Partition::nval() const {
    long s = 0;
    for (size_t i = 0; i < parts.size(); ++i) s += static_cast<long>(i) * parts[i];
    return s;
}

Partition Partition::tilde() const {
    std::vector<long> v(parts);
    for (long& x : v) ++x;
    return Partition(std::move(v));
}

DensityTarget::DensityTarget(long a_, long b_, long p_) : a(a_), b(b_), p(p_) {
    require(a >= b && b >= 0, "need a >= b >= 0");
    require(localfield::is_prime_ll(p) && p != 2, "p must be an odd prime");
}

Rational bracket(long u, long v, long p) {
    if (v < 0 || v > u) return Rational(0);
    // prod_{i=1..u} (1 - (-p)^{-i}) / (prod_{i=1..v} ... * prod_{i=1..u-v} ...)
    // The denominator blocks are prefixes of the numerator block, so only the
    // factors with i in (v, u] and i in (u-v, u] survive division:
    //   [u v] = prod_{i=v+1..u} (1-(-p)^{-i}) / prod_{i=1..u-v} (1-(-p)^{-i}).
    Rational num(1), den(1);
    for (long i = v + 1; i <= u; ++i) num *= Rational(1) - neg_p_pow(p, -i);
    for (long i = 1; i <= u - v; ++i) den *= Rational(1) - neg_p_pow(p, -i);
    return num / den;
}

Rational I_j(const Partition& mu, const Partition& lambda, long p, long j) {
    require(j >= 1, "j must be >= 1");
    const Partition tl = lambda.tilde();
    const long L1 = tl.conj(j + 1), L0 = tl.conj(j);
    const long M1 = mu.conj(j + 1), M0 = mu.conj(j);
    Rational sum(0);
    for (long i = M1; i <= std::min(L1, M0); ++i) {
        long twice_exp = i * (2 * L1 + 1 - i);
        internal_check(twice_exp % 2 == 0, "half-integer exponent in I_j");
        sum += neg_p_pow(p, twice_exp / 2) * bracket(L1 - M1, L1 - i, p) * bracket(L0 - i, L0 - M0, p);
    }
    return sum;
}

namespace {

// All non-increasing mu with mu_i <= bound_i componentwise.
void enumerate_sub(const std::vector<long>& bound, size_t i, long cap, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
    if (i == bound.size()) {
        out.push_back(cur);
        return;
    }
    for (long v = 0; v <= std::min(cap, bound[i]); ++v) {
        cur[i] = v;
        enumerate_sub(bound, i + 1, v, cur, out);
    }
}

Rational term_weight(const Partition& mu, const Partition& xi, long n, long m, long p) {
    long inner = 0;  // <xi', mu'> = sum_i xi'_i mu'_i
    long imax = std::min(xi.largest(), mu.largest());
    for (long i = 1; i <= imax; ++i) inner += xi.conj(i) * mu.conj(i);
    long expo = -mu.nval() + (n - m - 1) * mu.weight() + inner;
    Rational w = neg_p_pow(p, expo);
    return mu.weight() % 2 == 0 ? w : -w;
}

Rational truncated_product(const Partition& mu, const Partition& lambda, long p) {
    long J = lambda.largest() + 1;
    Rational prod(1);
    for (long j = 1; j <= J; ++j) prod *= I_j(mu, lambda, p, j);
    // Beyond every part of tilde(lambda) and mu all conjugate counts vanish
    // and the factors are 1; spot-check one extra index.
    internal_check(I_j(mu, lambda, p, J + 1) == 1, "I_j product truncated too early");
    return prod;
}

}  // namespace

Rational alpha_general(const Partition& xi, const Partition& lambda, long p) {
    require(localfield::is_prime_ll(p) && p != 2, "p must be an odd prime");
    const long m = static_cast<long>(xi.length());
    const long n = static_cast<long>(lambda.length());
    require(m >= n, "length(xi) must be >= length(lambda)");
    require(n >= 1, "lambda must be non-empty");

    const Partition tl = lambda.tilde();
    std::vector<std::vector<long>> mus;
    std::vector<long> cur(tl.parts.size(), 0);
    enumerate_sub(tl.parts, 0, tl.parts.empty() ? 0 : tl.parts.front(), cur, mus);

    Rational sum(0);
    for (auto& m_parts : mus) {
        Partition mu(std::move(m_parts));
        sum += term_weight(mu, xi, n, m, p) * truncated_product(mu, lambda, p);
    }
    return sum;
}

Polynomial f_poly_nonsplit(const DensityTarget& t) {
    require((t.a + t.b) % 2 == 0, "a+b must be even");
    const long p = t.p;
    const Partition lambda({t.a, t.b});
    std::vector<Rational> coeffs(static_cast<size_t>(t.a + t.b) + 3, Rational(0));
    for (long c = 0; c <= t.a + 1; ++c) {
        for (long d = 0; d <= std::min(c, t.b + 1); ++d) {
            const Partition mu({c, d});
            long J = lambda.largest() + 1;
            Rational prod(1);
            for (long j = 1; j <= J; ++j) prod *= I_j(mu, lambda, p, j);
            internal_check(I_j(mu, lambda, p, J + 1) == 1, "I_j product truncated too early");
            // (-1)^d p^{-2d-c} (-p)^{eps_c + eps_d} X^{c+d}
            Rational coef = pow_rational(Rational(p), -2 * d - c) * neg_p_pow(p, (c > 0) + (d > 0));
            if (d % 2 != 0) coef = -coef;
            coeffs[static_cast<size_t>(c + d)] += coef * prod;
        }
    }
    return Polynomial(std::move(coeffs));
}

namespace {

// X^n as a convenience
Polynomial X(long n) { return Polynomial::xpow(n); }

Polynomial linear(const Rational& c1, const Rational& c0) {
    return Polynomial({c0, c1});
}

}  // namespace

Polynomial f_poly_closed(const DensityTarget& t) {
    require((t.a + t.b) % 2 == 0, "a+b must be even");
    const long a = t.a, b = t.b, p = t.p;
    const long eps = b % 2;
    const Rational P(p), Pinv = ratio(Int(1), Int(p));

    // F_eps = (1-X)(X+p)/p * (X^2 - (p^2-p)X + 1)^eps
    Polynomial f_eps = Pinv * (linear(Rational(-1), Rational(1)) * linear(Rational(1), P));
    if (eps == 1) f_eps = f_eps * Polynomial({Rational(1), Rational(p - p * p), Rational(1)});

    // piece1 = (pX)(1-p) * ((pX)^b - (pX)^eps) / (pX - 1)
    Polynomial pxb = Polynomial::monomial(pow_rational(P, b), b);
    Polynomial pxe = Polynomial::monomial(pow_rational(P, eps), eps);
    Polynomial piece1 = linear(P * Rational(1 - p), Rational(0)) * div_exact(pxb - pxe, linear(P, Rational(-1)));

    // piece2 = X^2 (p - X/p) * (X^{2b} - X^{2eps}) / (X^2 - 1)
    Polynomial x2m1({Rational(-1), Rational(0), Rational(1)});
    Polynomial piece2 = X(2) * linear(-Pinv, P) * div_exact(X(2 * b) - X(2 * eps), x2m1);

    // piece3 = (-p^{b+1}(X-1) + pX^{b+1} - X^{b+2}/p) * (X^{a+1} - X^{b+1}) / (X^2 - 1)
    Polynomial head = -pow_rational(P, b + 1) * linear(Rational(1), Rational(-1)) +
                      P * X(b + 1) - Pinv * X(b + 2);
    Polynomial piece3 = head * div_exact(X(a + 1) - X(b + 1), x2m1);

    // F = F_eps + (X-1)(X+p)(piece1+piece2+piece3) / (X-p)
    Polynomial bracket_sum = piece1 + piece2 + piece3;
    Polynomial correction =
        div_exact(linear(Rational(1), Rational(-1)) * linear(Rational(1), P) * bracket_sum,
                  linear(Rational(1), -P));
    return f_eps + correction;
}

Polynomial f_poly_nagaoka(const DensityTarget& t) {
    const long a = t.a, b = t.b, p = t.p;
    const Rational Pinv = ratio(Int(1), Int(p));
    // (1 + X/p)(1 - X/p^2) * sum_{l=0..b} (pX)^l sum_{k=0..a+b-2l} (-X)^k
    Polynomial sum;
    for (long l = 0; l <= b; ++l) {
        Polynomial inner;
        for (long k = 0; k <= a + b - 2 * l; ++k)
            inner = inner + Polynomial::monomial(k % 2 == 0 ? Rational(1) : Rational(-1), k);
        sum = sum + Polynomial::monomial(pow_rational(Rational(p), l), l) * inner;
    }
    return linear(Pinv, Rational(1)) * linear(-Pinv * Pinv, Rational(1)) * sum;
}

Polynomial recursion_delta_A(const DensityTarget& t) {
    require((t.a + t.b) % 2 == 0, "a+b must be even");
    const long a = t.a, b = t.b, p = t.p;
    const Rational P(p), Pinv = ratio(Int(1), Int(p));
    // X^{a+1}(X+p)(X-1)(-p^{b+1}(X-1) + pX^{b+1} - X^{b+2}/p) / (X-p)
    Polynomial head = -pow_rational(P, b + 1) * linear(Rational(1), Rational(-1)) +
                      P * X(b + 1) - Pinv * X(b + 2);
    Polynomial num = X(a + 1) * linear(Rational(1), P) * linear(Rational(1), Rational(-1)) * head;
    return div_exact(num, linear(Rational(1), -P));
}

Polynomial recursion_delta_B(long b, long p) {
    require(b >= 0, "need b >= 0");
    require(localfield::is_prime_ll(p) && p != 2, "p must be an odd prime");
    const Rational P(p), Pinv = ratio(Int(1), Int(p));
    // X^{b+1}(X+p)(X-1)[((1+p-p^2)X - p)p^{b+1} + ((p^2-X)/p)X^{b+3}] / (X-p)
    Polynomial inner = pow_rational(P, b + 1) * linear(Rational(1 + p - p * p), -P) +
                       linear(-Pinv, P) * X(b + 3);
    Polynomial num = X(b + 1) * linear(Rational(1), P) * linear(Rational(1), Rational(-1)) * inner;
    return div_exact(num, linear(Rational(1), -P));
}

Rational alpha_prime(const DensityTarget& t) {
    return -f_poly_nonsplit(t).derivative().eval(Rational(1));
}

Rational mu_from_densities(const DensityTarget& t) {
    const Rational P(t.p);
    Rational alpha_selfdual = f_poly_nagaoka(t).eval(Rational(1));
    Rational combo = alpha_prime(t) + P * P / (Rational(1) - P * P) * alpha_selfdual;
    return P / ((P + 1) * (P + 1)) * combo;
}

}  // namespace hermdens::hironaka
