#pragma once

#include <vector>

#include "vis/unipoly.hpp"

namespace vis {

struct BothConstantInY : std::runtime_error {
    BothConstantInY() : std::runtime_error("resultant_y needs y-dependence in an argument") {}
};

// Bivariate polynomial over Q, stored as a polynomial in y whose
// coefficients are UniPoly in x.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> y_coeffs) : c_(std::move(y_coeffs)) { trim(); }

    // Single term a * x^dx * y^dy.
    static BiPoly term(int dx, int dy, const Rational& a);

    bool is_zero() const { return c_.empty(); }
    int degree_y() const { return static_cast<int>(c_.size()) - 1; }
    int degree_x() const;
    int total_degree() const;
    const UniPoly& coeff_y(int j) const { return c_[j]; }

    Rational eval(const Rational& x, const Rational& y) const;
    UniPoly eval_x(const Rational& x) const;  // section f(x, .) as poly in y
    UniPoly eval_y(const Rational& y) const;  // section f(., y) as poly in x

    BiPoly dx() const;
    BiPoly dy() const;
    BiPoly swap_xy() const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator*(const Rational& s) const;
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    std::string str() const;

  private:
    void trim();
    std::vector<UniPoly> c_;
};

// Resultant of f and g with respect to y: the determinant of the Sylvester
// matrix in y over Q[x], computed by fraction-free (Bareiss) elimination.
// Sign is the Sylvester-determinant convention with f-rows first.
// Vanishes identically when f and g share a component; vanishes at x0 iff
// f(x0,.) and g(x0,.) have a common root or both leading y-coefficients
// vanish at x0 (the degeneration at infinity inherent in resultants).
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

inline UniPoly resultant_x(const BiPoly& f, const BiPoly& g) {
    return resultant_y(f.swap_xy(), g.swap_xy());
}

}  // namespace vis
