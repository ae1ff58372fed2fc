#include "hermdens/global.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "hermdens/errors.hpp"

namespace hermdens::global {

namespace {

bool is_prime(const Int& n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// residue of n mod m in [0, m)
Int mod_pos(const Int& n, long m)
{
    Int r;
    Int mm(m);
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), mm.get_mpz_t());
    return r;
}

long ord_int(const Int& n, const Int& p, Int* unit = nullptr)
{
    internal_check(n != 0, "valuation of zero");
    Int u;
    long e = static_cast<long>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    if (unit) *unit = u;
    return e;
}

bool is_squarefree(const Int& n)
{
    for (const auto& [q, e] : factorize(abs(n)))
        if (e > 1) return false;
    return true;
}

}  // namespace

std::vector<std::pair<Int, unsigned long>> factorize(Int n)
{
    require(n >= 1, "factorize needs a positive integer");
    std::vector<std::pair<Int, unsigned long>> out;
    auto strip = [&](const Int& q) {
        if (n % q != 0) return;
        unsigned long e = static_cast<unsigned long>(ord_int(n, q, &n));
        out.emplace_back(q, e);
    };
    strip(2);
    for (Int f = 3; f * f <= n; f += 2) strip(f);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

QuadField::QuadField(Int d) : disc(std::move(d))
{
    require(disc < 0, "discriminant must be negative");
    Int r4 = mod_pos(disc, 4);
    require(r4 == 0 || r4 == 1, "discriminant must be 0 or 1 mod 4");
    if (r4 == 1) {
        require(is_squarefree(disc), "discriminant not fundamental");
    } else {
        Int m = disc / 4;
        Int m4 = mod_pos(m, 4);
        require((m4 == 2 || m4 == 3) && is_squarefree(m), "discriminant not fundamental");
    }
}

FieldElem conj(const QuadField& F, const FieldElem& u)
{
    // conj(omega) = trace - omega = disc - omega
    return FieldElem(u.x + u.y * Rational(F.disc), -u.y);
}

FieldElem add(const FieldElem& u, const FieldElem& v) { return FieldElem(u.x + v.x, u.y + v.y); }

FieldElem sub(const FieldElem& u, const FieldElem& v) { return FieldElem(u.x - v.x, u.y - v.y); }

FieldElem mul(const QuadField& F, const FieldElem& u, const FieldElem& v)
{
    // omega^2 = disc*omega - (disc^2 - disc)/4
    Rational nw = ratio(F.disc * F.disc - F.disc, 4);
    internal_check(nw.get_den() == 1, "norm of omega not integral");
    return FieldElem(u.x * v.x - u.y * v.y * nw, u.x * v.y + u.y * v.x + u.y * v.y * Rational(F.disc));
}

Rational norm(const QuadField& F, const FieldElem& u)
{
    FieldElem n = mul(F, u, conj(F, u));
    internal_check(n.y == 0, "norm has a nonzero omega part");
    return n.x;
}

Rational trace(const QuadField& F, const FieldElem& u)
{
    return 2 * u.x + u.y * Rational(F.disc);
}

GlobalHermitianMatrix::GlobalHermitianMatrix(const QuadField& F, Int t1_, Int t2_, FieldElem a_)
    : t1(std::move(t1_)), t2(std::move(t2_)), a(std::move(a_))
{
    require(a.is_integral(), "off-diagonal entry must be integral");
    Rational det = Rational(t1) * Rational(t2) - norm(F, a);
    internal_check(det.get_den() == 1, "determinant not integral");
    det_value = det.get_num();
}

LevelStructure::LevelStructure(const QuadField& F, Int d_) : d(std::move(d_))
{
    require(d >= 1, "level must be positive");
    for (const auto& [q, e] : factorize(d)) {
        require(e == 1, "level must be squarefree");
        require(classify_prime(F, q) == SplitType::inert, "level must be a product of inert primes");
    }
}

std::string to_string(SplitType t)
{
    switch (t) {
        case SplitType::split: return "split";
        case SplitType::inert: return "inert";
        case SplitType::ramified: return "ramified";
    }
    throw std::logic_error("unreachable");
}

SplitType classify_prime(const QuadField& F, const Int& l)
{
    require(is_prime(l), "classify_prime needs a prime");
    if (F.disc % l == 0) return SplitType::ramified;
    int k = mpz_kronecker(F.disc.get_mpz_t(), l.get_mpz_t());
    internal_check(k == 1 || k == -1, "kronecker symbol vanished away from the discriminant");
    return k == 1 ? SplitType::split : SplitType::inert;
}

Place Place::at_infinity()
{
    Place v;
    v.infinite = true;
    return v;
}

Place Place::finite(Int p)
{
    require(is_prime(p), "finite place needs a prime");
    Place v;
    v.p = std::move(p);
    return v;
}

long ord_at(const Rational& x, const Int& l)
{
    require(x != 0, "valuation of zero");
    return ord_int(x.get_num(), l) - ord_int(x.get_den(), l);
}

namespace {

// p-unit part of a nonzero rational, as the pair (numerator unit, denominator unit)
std::pair<Int, Int> unit_parts(const Rational& x, const Int& p)
{
    Int nu, du;
    ord_int(x.get_num(), p, &nu);
    ord_int(x.get_den(), p, &du);
    return {nu, du};
}

int legendre_rational(const std::pair<Int, Int>& u, const Int& p)
{
    // (n/d | p) = (n | p)(d | p) for p-units n, d
    return mpz_legendre(u.first.get_mpz_t(), p.get_mpz_t()) *
           mpz_legendre(u.second.get_mpz_t(), p.get_mpz_t());
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v)
{
    require(a != 0 && b != 0, "hilbert symbol needs nonzero arguments");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;

    const Int& p = v.p;
    long alpha = ord_at(a, p);
    long beta = ord_at(b, p);
    auto ua = unit_parts(a, p);
    auto ub = unit_parts(b, p);

    if (p != 2) {
        // (-1)^{alpha beta (p-1)/2} (u|p)^beta (v|p)^alpha
        int sign = 1;
        Int h = (p - 1) / 2;
        if ((alpha % 2) != 0 && (beta % 2) != 0 && mpz_odd_p(h.get_mpz_t())) sign = -sign;
        if ((beta % 2) != 0) sign *= legendre_rational(ua, p);
        if ((alpha % 2) != 0) sign *= legendre_rational(ub, p);
        return sign;
    }

    // p = 2: units u = n/d with n, d odd satisfy u = n d mod 8 since d^2 = 1 mod 8
    Int u8 = mod_pos(ua.first * ua.second, 8);
    Int w8 = mod_pos(ub.first * ub.second, 8);
    int eps_u = (u8 == 3 || u8 == 7) ? 1 : 0;  // (u-1)/2 mod 2
    int eps_w = (w8 == 3 || w8 == 7) ? 1 : 0;
    int om_u = (u8 == 3 || u8 == 5) ? 1 : 0;  // (u^2-1)/8 mod 2
    int om_w = (w8 == 3 || w8 == 5) ? 1 : 0;
    long par = eps_u * eps_w + (alpha % 2 != 0 ? om_w : 0) + (beta % 2 != 0 ? om_u : 0);
    return (par % 2 != 0) ? -1 : 1;
}

int inv_V(const Rational& detV, const QuadField& F, const Place& v)
{
    return hilbert_symbol(detV, Rational(F.disc), v);
}

std::vector<Int> diff_set(const QuadField& F, const LevelStructure& level,
                          const GlobalHermitianMatrix& T)
{
    if (T.det_value == 0) throw precondition_error("degenerate T");
    require(T.positive_definite(), "T must be positive definite");

    std::vector<Int> out;
    for (const auto& [q, e] : factorize(T.det_value)) {
        if (level.d % q == 0) continue;
        if (e % 2 == 1 && classify_prime(F, q) == SplitType::inert) out.push_back(q);
    }
    for (const auto& [q, e] : factorize(level.d)) {
        long ord = (T.det_value % q == 0) ? ord_int(T.det_value, q) : 0;
        if (ord % 2 == 0) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<long, long> localize(const QuadField& F, const GlobalHermitianMatrix& T, const Int& p)
{
    require(p % 2 != 0, "p must be odd");
    require(classify_prime(F, p) == SplitType::inert, "p must be inert");
    if (T.det_value == 0) throw precondition_error("degenerate T");

    std::optional<long> b;
    auto feed = [&](long v) {
        if (!b || v < *b) b = v;
    };
    if (T.t1 != 0) feed(ord_int(T.t1, p));
    if (T.t2 != 0) feed(ord_int(T.t2, p));
    if (!T.a.is_zero()) {
        Rational na = norm(F, T.a);
        long vn = ord_int(na.get_num(), p);
        internal_check(vn % 2 == 0, "odd valuation of a norm at an inert prime");
        feed(vn / 2);
    }
    internal_check(b.has_value(), "nonzero matrix has an entry");

    long det_ord = ord_int(T.det_value, p);
    long a_exp = det_ord - *b;
    internal_check(a_exp >= *b, "diagonalization exponents out of order");
    return {a_exp, *b};
}

std::pair<Int, int> class_number(const QuadField& F)
{
    // reduced primitive forms ax^2 + bxy + cy^2 of discriminant disc:
    // -a < b <= a <= c, with b >= 0 when a == c, gcd(a,b,c) = 1
    Int absd = -F.disc;
    Int h = 0;
    for (Int a = 1; 3 * a * a <= absd; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            Int num = b * b + absd;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) ++h;
        }
    }
    int w = F.disc == -3 ? 6 : (F.disc == -4 ? 4 : 2);
    return {h, w};
}

WhittakerValue whittaker_shell(const QuadField& F, int n, int r, const Int& p,
                               const localfield::LocalHermitianSpec& S, const Rational& alpha)
{
    require(n >= 1, "need n >= 1");
    require(r >= 0, "need r >= 0");
    require(static_cast<int>(S.diag_exponents.size()) == n, "S must have n diagonal entries");
    SplitType t = classify_prime(F, p);
    if (t == SplitType::ramified) throw precondition_error("ramified normalization out of scope");
    require(t == SplitType::inert, "p must be inert");

    long sum = 0;
    for (long e : S.diag_exponents) sum += e;
    require(p.fits_slong_p(), "prime too large");
    WhittakerValue out;
    out.value = pow_rational(Rational(p), -static_cast<long>(n) * sum) * alpha;
    out.exponent_e = ratio(Int(n) * (3 * Int(n) + 4 * Int(r) - 1), 4);
    out.gamma = "gamma^" + std::to_string(n);
    return out;
}

Rational whittaker_derivative_factor(long a, long b, long p)
{
    Int m = localfield::mu(a, b, p);
    Int pp(p);
    return ratio((pp + 1) * (pp + 1), pp * pp * pp) * Rational(m);
}

namespace {

constexpr long kRepsCellBudget = 10000000;

// inverse of a nonsingular n x n rational matrix by Gauss-Jordan elimination
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m)
{
    size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        internal_check(piv < n, "singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col];
            for (size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

Int count_lattice_reps(const QuadField& F, const GlobalHermitianMatrix& gramL,
                       const GlobalHermitianMatrix& T)
{
    require(gramL.positive_definite(), "lattice Gram matrix must be positive definite");
    require(T.positive_definite(), "T must be positive definite");

    // h(u, v) = conj(u1)(g1 v1 + a v2) + conj(u2)(conj(a) v1 + g2 v2)
    FieldElem g1(Rational(gramL.t1), Rational(0));
    FieldElem g2(Rational(gramL.t2), Rational(0));
    const FieldElem& ga = gramL.a;
    FieldElem gac = conj(F, ga);
    auto pairing = [&](const FieldElem& u1, const FieldElem& u2, const FieldElem& v1,
                       const FieldElem& v2) {
        FieldElem row1 = add(mul(F, g1, v1), mul(F, ga, v2));
        FieldElem row2 = add(mul(F, gac, v1), mul(F, g2, v2));
        return add(mul(F, conj(F, u1), row1), mul(F, conj(F, u2), row2));
    };

    // integer coordinates (c1, c2, c3, c4) -> (c1 + c2 omega, c3 + c4 omega);
    // the norm h(v, v) is a positive definite quadratic form in them
    const FieldElem one(Rational(1), Rational(0));
    const FieldElem omega(Rational(0), Rational(1));
    const FieldElem zero;
    std::vector<std::pair<FieldElem, FieldElem>> basis = {
        {one, zero}, {omega, zero}, {zero, one}, {zero, omega}};

    auto qval = [&](const FieldElem& v1, const FieldElem& v2) {
        FieldElem h = pairing(v1, v2, v1, v2);
        internal_check(h.y == 0, "norm has a nonzero omega part");
        return h.x;
    };
    std::vector<std::vector<Rational>> Q(4, std::vector<Rational>(4, Rational(0)));
    for (int i = 0; i < 4; ++i) {
        const auto& [e1, e2] = basis[i];
        Q[i][i] = qval(e1, e2);
        for (int j = i + 1; j < 4; ++j) {
            const auto& [f1, f2] = basis[j];
            Rational cross = qval(add(e1, f1), add(e2, f2)) - Q[i][i] - qval(f1, f2);
            Q[i][j] = Q[j][i] = cross / 2;
        }
    }
    auto Qinv = invert(Q);

    // v^t Q v = t forces v_i^2 <= t (Q^{-1})_{ii}
    Int tmax = std::max(T.t1, T.t2);
    long bound[4];
    Int cells = 1;
    for (int i = 0; i < 4; ++i) {
        Rational cap = Rational(tmax) * Qinv[i][i];
        internal_check(cap > 0, "inverse diagonal not positive");
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), cap.get_num().get_mpz_t(), cap.get_den().get_mpz_t());
        Int B;
        mpz_sqrt(B.get_mpz_t(), fl.get_mpz_t());
        cells *= 2 * B + 1;
        if (cells > kRepsCellBudget)
            throw budget_error("representation search too large: box exceeds " +
                               std::to_string(kRepsCellBudget) + " cells");
        bound[i] = B.get_si();
    }

    // common-denominator integer form for the box scan
    Int den = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int g;
            mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), Q[i][j].get_den().get_mpz_t());
            den = g;
        }
    Int M[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational scaled = Q[i][j] * Rational(den);
            internal_check(scaled.get_den() == 1, "clearing denominators failed");
            M[i][j] = scaled.get_num();
        }
    Int target1 = den * T.t1, target2 = den * T.t2;

    std::vector<std::array<long, 4>> v1s, v2s;
    std::array<long, 4> c{};
    for (c[0] = -bound[0]; c[0] <= bound[0]; ++c[0])
        for (c[1] = -bound[1]; c[1] <= bound[1]; ++c[1])
            for (c[2] = -bound[2]; c[2] <= bound[2]; ++c[2])
                for (c[3] = -bound[3]; c[3] <= bound[3]; ++c[3]) {
                    Int s = 0;
                    for (int i = 0; i < 4; ++i) {
                        Int row = 0;
                        for (int j = 0; j < 4; ++j) row += M[i][j] * c[j];
                        s += row * c[i];
                    }
                    if (s == target1) v1s.push_back(c);
                    if (s == target2) v2s.push_back(c);
                }

    if (Int(v1s.size()) * Int(v2s.size()) > kRepsCellBudget)
        throw budget_error("representation search too large: too many norm vectors");

    auto to_elem = [](const std::array<long, 4>& cc) {
        return std::make_pair(FieldElem(Rational(cc[0]), Rational(cc[1])),
                              FieldElem(Rational(cc[2]), Rational(cc[3])));
    };
    Int count = 0;
    for (const auto& vc : v1s) {
        auto [v1, v2] = to_elem(vc);
        for (const auto& wc : v2s) {
            auto [w1, w2] = to_elem(wc);
            if (pairing(v1, v2, w1, w2) == T.a) ++count;
        }
    }
    return count;
}

}  // namespace hermdens::global
