#pragma once

#include <cstdint>

#include "vis/geometry.hpp"

namespace vis {

struct InvalidM : std::runtime_error {
    explicit InvalidM(const std::string& w) : std::runtime_error(w) {}
};
struct SingularCurve : std::runtime_error {
    SingularCurve() : std::runtime_error("4a^3 + 27b^2 = 0: curve is singular") {}
};
struct TorsionCollision : std::runtime_error {
    explicit TorsionCollision(const std::string& w) : std::runtime_error(w) {}
};
struct HeightCapExceeded : std::runtime_error {
    explicit HeightCapExceeded(const std::string& w) : std::runtime_error(w) {}
};
struct RetriesExhausted : std::runtime_error {
    explicit RetriesExhausted(const std::string& w) : std::runtime_error(w) {}
};

// m/2 antipodal pairs on the unit circle via t -> ((1-t^2)/(1+t^2),
// 2t/(1+t^2)) for t = 1..m/2, plus the origin as the single blocker.
// m even, >= 2. Order: pair for t=1, pair for t=2, ..., origin last.
PointSet gen_one_blocker(int m);

// {(t, t^3) : -m <= t <= m}. Collinear triples are exactly the distinct
// parameter triples summing to zero.
PointSet gen_cubic_power(int m);

// {P, 2P, ..., nP} on y^2 = x^3 + ax + b by the exact chord-tangent group
// law. Errors when a multiple hits the point at infinity.
PointSet gen_elliptic_coset(const Rational& a, const Rational& b, const Point& P, int n,
                            int height_cap = 50);

// n integer-coordinate points in [0, range]^2, rejection-sampled until no
// three are collinear; deterministic per seed.
PointSet gen_random_general(int n, long range, uint64_t seed);

PointSet gen_grid(int w, int h);

}  // namespace vis
