#pragma once

#include "vis/bipoly.hpp"

namespace vis {

struct CertificationFailure : std::runtime_error {
    explicit CertificationFailure(const std::string& what) : std::runtime_error(what) {}
};

// Closed rational interval, endpoints included.
struct RatInterval {
    Rational lo, hi;
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    Rational width() const { return hi - lo; }
};

RatInterval iv_add(const RatInterval& a, const RatInterval& b);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b);
RatInterval iv_eval(const UniPoly& p, const RatInterval& x);
RatInterval iv_eval(const BiPoly& p, const RatInterval& x, const RatInterval& y);

// Exact test: does q vanish at the algebraic real a? Decided by gcd with
// the defining polynomial and a Sturm count on the isolating interval.
bool poly_vanishes_at(const UniPoly& q, const AlgReal& a);

// A certified real solution of a bivariate polynomial system.
struct SystemSolution {
    AlgReal x, y;
};

// All real solutions of {f = 0, g = 0} (finite solution set required),
// optionally filtered by additional equations that must also vanish.
// Candidates come from the two elimination resultants; pairs are kept or
// discarded by exact substitution when a coordinate is rational and by
// interval exclusion otherwise, refining up to `max_depth` halvings.
// Throws CertificationFailure when the resultants vanish identically
// (positive-dimensional system) or the boxes cannot be separated.
std::vector<SystemSolution> solve_system2(const BiPoly& f, const BiPoly& g,
                                          const std::vector<BiPoly>& filters = {},
                                          int max_depth = 96);

}  // namespace vis
