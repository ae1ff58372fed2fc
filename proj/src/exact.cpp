#include "hermdens/exact.hpp"

#include <ostream>
#include <utility>

namespace hermdens {

Rational ratio(const Int& num, const Int& den) {
    require(den != 0, "rational with zero denominator");
    Rational q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw precondition_error("malformed rational: '" + s + "'");
    require(q.get_den() != 0, "rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) require(base != 0, "zero base with negative exponent");
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Int n = pow_int(base.get_num(), k);
    Int d = pow_int(base.get_den(), k);
    if (e < 0) std::swap(n, d);
    return ratio(n, d);
}

Rational neg_p_pow(long p, long e) { return pow_rational(Rational(-p), e); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, long deg) {
    require(deg >= 0, "monomial with negative degree");
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(v));
}

Polynomial div_exact(const Polynomial& num, const Polynomial& den) {
    require(!den.is_zero(), "division by the zero polynomial");
    if (num.is_zero()) return Polynomial();
    long dn = num.degree(), dd = den.degree();
    if (dn < dd) throw inexact_division_error("inexact division: degree too low");
    std::vector<Rational> rem(num.coeffs());
    std::vector<Rational> quot(static_cast<size_t>(dn - dd) + 1, Rational(0));
    const Rational lead = den.coeff(dd);
    for (long i = dn - dd; i >= 0; --i) {
        Rational q = rem[static_cast<size_t>(i + dd)] / lead;
        quot[static_cast<size_t>(i)] = q;
        if (q != 0)
            for (long j = 0; j <= dd; ++j) rem[static_cast<size_t>(i + j)] -= q * den.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) throw inexact_division_error("inexact division: nonzero remainder");
    return Polynomial(std::move(quot));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    return Polynomial::constant(c) * p;
}

std::vector<std::string> coeff_strings(const Polynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

Polynomial polynomial_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(rational_from_string(s));
    return Polynomial(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_string(c) << ")";
        if (i >= 1) os << "*X";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os;
}

}  // namespace hermdens
