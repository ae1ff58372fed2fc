#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hermdens/exact.hpp"
#include "hermdens/localfield.hpp"

namespace hermdens::global {

// Imaginary quadratic field of fundamental discriminant disc < 0.
struct QuadField {
    Int disc;
    explicit QuadField(Int disc);
};

// x + y*omega with omega = (disc + sqrt(disc))/2, so omega has trace disc
// and norm (disc^2 - disc)/4.
struct FieldElem {
    Rational x, y;
    FieldElem() : x(0), y(0) {}
    FieldElem(Rational x, Rational y) : x(std::move(x)), y(std::move(y)) {}
    bool operator==(const FieldElem& o) const { return x == o.x && y == o.y; }
    bool is_integral() const { return x.get_den() == 1 && y.get_den() == 1; }
    bool is_zero() const { return x == 0 && y == 0; }
};

FieldElem conj(const QuadField& F, const FieldElem& u);
FieldElem add(const FieldElem& u, const FieldElem& v);
FieldElem sub(const FieldElem& u, const FieldElem& v);
FieldElem mul(const QuadField& F, const FieldElem& u, const FieldElem& v);
Rational norm(const QuadField& F, const FieldElem& u);
Rational trace(const QuadField& F, const FieldElem& u);

// ((t1, a), (a', t2)) with integer diagonal and integral off-diagonal entry.
struct GlobalHermitianMatrix {
    Int t1, t2;
    FieldElem a;
    GlobalHermitianMatrix(const QuadField& F, Int t1, Int t2, FieldElem a);
    Int det_value;  // t1 t2 - N(a), a rational integer
    bool positive_definite() const { return t1 > 0 && det_value > 0; }
};

// Squarefree product of primes inert in the field.
struct LevelStructure {
    Int d;
    LevelStructure(const QuadField& F, Int d);
};

enum class SplitType { split, inert, ramified };
std::string to_string(SplitType t);

SplitType classify_prime(const QuadField& F, const Int& l);

struct Place {
    bool infinite = false;
    Int p;
    static Place at_infinity();
    static Place finite(Int p);
};

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// inv_v of the Hermitian space with determinant detV: (detV, disc)_v
int inv_V(const Rational& detV, const QuadField& F, const Place& v);

// Diff(T) = {l inert, l not dividing d, ord_l(det T) odd}
//           u {l | d, ord_l(det T) even}
std::vector<Int> diff_set(const QuadField& F, const LevelStructure& level,
                          const GlobalHermitianMatrix& T);

// Exponents (a, b) of the local diagonalization diag(p^a, p^b) at an inert
// odd prime: b = least entry valuation, a = ord_p(det T) - b.
std::pair<long, long> localize(const QuadField& F, const GlobalHermitianMatrix& T, const Int& p);

// (h, unit order) by exhaustive reduced-form enumeration.
std::pair<Int, int> class_number(const QuadField& F);

struct WhittakerValue {
    Rational value;       // |N(det S)|_p^{n/2} * alpha
    Rational exponent_e;  // n(3n + 4r - 1)/4
    std::string gamma;    // the root-of-unity factor, carried symbolically
};

WhittakerValue whittaker_shell(const QuadField& F, int n, int r, const Int& p,
                               const localfield::LocalHermitianSpec& S, const Rational& alpha);

// (p+1)^2/p^3 * mu(a,b,p): the rational coefficient of gamma^2 log p in the
// derivative of the nonsplit Whittaker value.
Rational whittaker_derivative_factor(long a, long b, long p);

// Pairs (x1, x2) in L^2 with Gram matrix exactly T, where L is the rank-2
// lattice with Gram matrix gramL over the ring of integers.
Int count_lattice_reps(const QuadField& F, const GlobalHermitianMatrix& gramL,
                       const GlobalHermitianMatrix& T);

// ord_l of a nonzero rational (valuation of numerator minus denominator).
long ord_at(const Rational& x, const Int& l);

// Trial-division factorization of n >= 1, primes ascending.
std::vector<std::pair<Int, unsigned long>> factorize(Int n);

}  // namespace hermdens::global
