#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "hermdens/errors.hpp"

namespace hermdens {

using Int = mpz_class;
// Kept canonical: lowest terms, positive denominator.  All construction goes
// through ratio()/rational_from_string(), and GMP arithmetic preserves the
// canonical form.
using Rational = mpq_class;

Rational ratio(const Int& num, const Int& den);
Rational rational_from_string(const std::string& s);  // "num" or "num/den"
std::string to_string(const Rational& q);             // "num" when den == 1
std::string to_string(const Int& z);

Int pow_int(const Int& base, unsigned long e);
Rational pow_rational(const Rational& base, long e);  // e < 0 needs base != 0
Rational neg_p_pow(long p, long e);                   // (-p)^e

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Canonical form: no trailing zero coefficients; the zero polynomial stores
// nothing and reports degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, long deg);
    // x^deg
    static Polynomial xpow(long deg) { return monomial(Rational(1), deg); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(long i) const;  // 0 outside the stored range
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const;  // Horner
    Polynomial derivative() const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient of an exact division; throws inexact_division_error on a nonzero
// remainder and precondition_error on a zero divisor.
Polynomial div_exact(const Polynomial& num, const Polynomial& den);

Polynomial operator*(const Rational& c, const Polynomial& p);

// Serialized form: one decimal string per coefficient, lowest degree first.
std::vector<std::string> coeff_strings(const Polynomial& p);
Polynomial polynomial_from_strings(const std::vector<std::string>& coeffs);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace hermdens
