#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vis/rational.hpp"

namespace vis {

struct Point {
    Rational x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

struct DuplicatePoint : std::runtime_error {
    explicit DuplicatePoint(const std::string& what) : std::runtime_error(what) {}
};
struct TooFewPoints : std::runtime_error {
    explicit TooFewPoints(const std::string& what) : std::runtime_error(what) {}
};

// Finite planar point set with pairwise-distinct points. Order is the
// indexing convention used by every downstream structure.
class PointSet {
  public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts, std::string label = "");

    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    const std::string& label() const { return label_; }

  private:
    std::vector<Point> points_;
    std::string label_;
};

// Canonical integer line identifier for a*x + b*y + c = 0:
// gcd(|a|,|b|,|c|) = 1, (a,b) != (0,0), first nonzero of (a,b) positive.
struct LineKey {
    Integer a, b, c;
    bool operator<(const LineKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const LineKey& o) const { return a == o.a && b == o.b && c == o.c; }
    bool contains(const Point& p) const { return a * p.x + b * p.y + c == 0; }
};

LineKey line_through(const Point& p, const Point& q);

struct LineStats {
    long long t2 = 0;                           // lines with exactly two points
    std::map<int, long long> histogram;         // line size -> count (sizes >= 2)
    std::map<LineKey, std::vector<int>> rich_lines;  // size >= 3 only
};

// Sign of det(q - p, r - p): +1 when r lies to the left of p->q,
// 0 iff p, q, r are collinear.
int orient(const Point& p, const Point& q, const Point& r);

// r in the open segment (pq): collinear and strictly inside.
bool strictly_between(const Point& p, const Point& q, const Point& r);

// Assigns every unordered pair to its canonical line; |A| >= 2 required.
LineStats enumerate_lines(const PointSet& A);

int max_collinear(const PointSet& A);

}  // namespace vis
