#include "vis/generators.hpp"

#include <random>

namespace vis {

PointSet gen_one_blocker(int m) {
    if (m < 2 || m % 2 != 0) throw InvalidM("m must be even and >= 2");
    std::vector<Point> pts;
    for (long t = 1; t <= m / 2; ++t) {
        Rational den(t * t + 1);
        Rational x = Rational(1 - t * t) / den;
        Rational y = Rational(2 * t) / den;
        pts.push_back({x, y});
        pts.push_back({-x, -y});
    }
    pts.push_back({Rational(0), Rational(0)});
    return PointSet(std::move(pts), "one-blocker");
}

PointSet gen_cubic_power(int m) {
    if (m < 1) throw InvalidM("m must be >= 1");
    std::vector<Point> pts;
    for (long t = -m; t <= m; ++t) pts.push_back({Rational(t), Rational(t * t * t)});
    return PointSet(std::move(pts), "cubic-power");
}

static bool on_curve(const Rational& a, const Rational& b, const Point& P) {
    return P.y * P.y == P.x * P.x * P.x + a * P.x + b;
}

// Chord-tangent sum of two affine curve points; nullopt = point at infinity.
static std::optional<Point> ec_add(const Rational& a, const Point& P, const Point& Q) {
    Rational s;
    if (P.x == Q.x) {
        if (P.y != Q.y || P.y == 0) return std::nullopt;
        s = (Rational(3) * P.x * P.x + a) / (Rational(2) * P.y);
    } else {
        s = (Q.y - P.y) / (Q.x - P.x);
    }
    Rational x3 = s * s - P.x - Q.x;
    Rational y3 = s * (P.x - x3) - P.y;
    return Point{x3, y3};
}

PointSet gen_elliptic_coset(const Rational& a, const Rational& b, const Point& P, int n,
                            int height_cap) {
    if (Rational(4) * a * a * a + Rational(27) * b * b == 0) throw SingularCurve();
    if (!on_curve(a, b, P)) throw std::invalid_argument("base point is not on the curve");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > height_cap) throw HeightCapExceeded("n exceeds the height cap");
    std::vector<Point> pts{P};
    Point cur = P;
    for (int k = 2; k <= n; ++k) {
        auto next = ec_add(a, cur, P);
        if (!next) throw TorsionCollision(std::to_string(k) + "P is the point at infinity");
        cur = *next;
        pts.push_back(cur);
    }
    return PointSet(std::move(pts), "elliptic-coset");
}

PointSet gen_random_general(int n, long range, uint64_t seed) {
    if (n < 1 || range < 1) throw std::invalid_argument("n and range must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(0, range);
    std::vector<Point> pts;
    long long retries = 0, cap = 2000LL * n + 2000;
    while (static_cast<int>(pts.size()) < n) {
        if (++retries > cap) throw RetriesExhausted("could not avoid collinear triples");
        Point cand{Rational(dist(rng)), Rational(dist(rng))};
        bool ok = true;
        for (const Point& p : pts)
            if (p == cand) ok = false;
        for (size_t i = 0; ok && i < pts.size(); ++i)
            for (size_t j = i + 1; ok && j < pts.size(); ++j)
                if (orient(pts[i], pts[j], cand) == 0) ok = false;
        if (ok) pts.push_back(cand);
    }
    return PointSet(std::move(pts), "random-general");
}

PointSet gen_grid(int w, int h) {
    if (w < 1 || h < 1) throw std::invalid_argument("w and h must be >= 1");
    std::vector<Point> pts;
    for (long gy = 0; gy < h; ++gy)
        for (long gx = 0; gx < w; ++gx) pts.push_back({Rational(gx), Rational(gy)});
    return PointSet(std::move(pts), "grid");
}

}  // namespace vis
