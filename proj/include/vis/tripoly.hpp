#pragma once

#include <array>
#include <map>

#include "vis/bipoly.hpp"

namespace vis {

// Sparse trivariate polynomial over Q in (X, Y, Z). Degrees stay tiny
// (<= 6) everywhere in this project.
class TriPoly {
  public:
    using Key = std::array<int, 3>;

    TriPoly() = default;
    static TriPoly term(int i, int j, int k, const Rational& a);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    bool is_homogeneous(int deg) const;
    Rational coeff(int i, int j, int k) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational eval(const Rational& X, const Rational& Y, const Rational& Z) const;
    TriPoly partial(int var) const;  // 0 = X, 1 = Y, 2 = Z

    // Composition with linear substitutions for each variable.
    TriPoly subst(const TriPoly& sx, const TriPoly& sy, const TriPoly& sz) const;

    // Chart sections.
    BiPoly dehom_z() const;  // (x, y) with Z = 1
    BiPoly dehom_y() const;  // (x, z) with Y = 1
    BiPoly dehom_x() const;  // (y, z) with X = 1

    friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    TriPoly operator*(const Rational& s) const;
    bool operator==(const TriPoly& o) const { return terms_ == o.terms_; }

    // Exact division under lex order; returns nullopt when not divisible.
    static std::optional<TriPoly> divide_exact(const TriPoly& num, const TriPoly& den);

    // Clears denominators and integer content, positive lex-leading coefficient.
    TriPoly primitive() const;

    // True when the two polynomials differ by a nonzero scalar.
    static bool proportional(const TriPoly& a, const TriPoly& b);

    std::string str() const;

  private:
    void add_term(const Key& k, const Rational& a);
    std::map<Key, Rational> terms_;
};

}  // namespace vis
