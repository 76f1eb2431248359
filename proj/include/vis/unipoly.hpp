#pragma once

#include <utility>
#include <vector>

#include "vis/rational.hpp"

namespace vis {

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("operation undefined for the zero polynomial") {}
};

// Univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial is the empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& a);
    static UniPoly monomial(int deg, const Rational& a);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign(eval(x)); }
    // Sign of the value at +inf / -inf.
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    UniPoly derivative() const;
    UniPoly negate() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Euclidean division over Q; b must be nonzero.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    // Exact division; throws if the remainder is nonzero.
    static UniPoly div_exact(const UniPoly& a, const UniPoly& b);

    // Monic gcd over Q (gcd of zero polynomials is zero).
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    UniPoly monic() const;
    // p / gcd(p, p'): same roots, all simple.
    UniPoly square_free_part() const;
    // Yun decomposition: list of (factor, multiplicity) with square-free,
    // pairwise coprime factors.
    std::vector<std::pair<UniPoly, int>> square_free_decomposition() const;

    // Clears denominators and content; primitive integer-coefficient
    // representative with positive leading coefficient.
    UniPoly primitive_part() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Sturm sequence of p (p square-free not required; the sequence still
// counts distinct roots).
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
// Number of distinct real roots of p in (a, b], a < b.
int sturm_count(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b);
int sturm_count_all(const std::vector<UniPoly>& seq);
// Sign variation count of the sequence evaluated at x (or at -inf/+inf).
int sign_variations_at(const std::vector<UniPoly>& seq, const Rational& x);

// Cauchy-style bound B with all real roots in (-B, B].
Rational root_bound(const UniPoly& p);

// An algebraic real certified by a Sturm isolating interval: poly is
// square-free and has exactly one real root in (lo, hi].
struct IsolatedRoot {
    UniPoly poly;
    Rational lo, hi;
    int multiplicity = 1;  // multiplicity in the polynomial it was isolated from

    double approx() const { return (to_double(lo) + to_double(hi)) / 2; }
};

enum class Cmp { Less, Equal, Greater };

// All real roots of p, pairwise-disjoint isolating intervals, multiplicities
// from the square-free decomposition. Throws ZeroPolynomial on p == 0.
std::vector<IsolatedRoot> sturm_isolate(const UniPoly& p);

// Shrinks the isolating interval below `width` without changing the
// designated root. Idempotent when already narrow enough.
IsolatedRoot refine(const IsolatedRoot& r, const Rational& width);

// Exact order of the designated root against q.
Cmp compare_root_rational(const IsolatedRoot& r, const Rational& q);

// A real number that is either rational or a certified algebraic root.
class AlgReal {
  public:
    AlgReal() : rational_(true), value_(0) {}
    AlgReal(Rational v) : rational_(true), value_(std::move(v)) {}
    AlgReal(IsolatedRoot r);

    bool is_rational() const { return rational_; }
    const Rational& rational_value() const { return value_; }
    const IsolatedRoot& root() const { return root_; }

    Cmp compare(const Rational& q) const;
    Cmp compare(const AlgReal& o) const;
    bool operator<(const AlgReal& o) const { return compare(o) == Cmp::Less; }
    bool operator==(const AlgReal& o) const { return compare(o) == Cmp::Equal; }

    // Rational bracket lo < x <= hi (trivial when rational).
    Rational lower() const { return rational_ ? value_ : root_.lo; }
    Rational upper() const { return rational_ ? value_ : root_.hi; }
    void tighten(const Rational& width);  // in-place refine, no-op when rational

    double approx() const { return rational_ ? to_double(value_) : root_.approx(); }
    std::string str() const;

  private:
    bool rational_;
    Rational value_;
    mutable IsolatedRoot root_;
};

// A rational number strictly between a and b (a < b required).
Rational rational_between(const AlgReal& a, const AlgReal& b);

}  // namespace vis
