#include "vis/geometry.hpp"

#include <set>

namespace vis {

PointSet::PointSet(std::vector<Point> pts, std::string label)
    : points_(std::move(pts)), label_(std::move(label)) {
    std::set<Point> seen;
    for (const auto& p : points_)
        if (!seen.insert(p).second)
            throw DuplicatePoint("duplicate point (" + to_string(p.x) + ", " + to_string(p.y) +
                                 ")");
}

int orient(const Point& p, const Point& q, const Point& r) {
    Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign(det);
}

bool strictly_between(const Point& p, const Point& q, const Point& r) {
    if (orient(p, q, r) != 0) return false;
    if (p.x != q.x) {
        auto [lo, hi] = std::minmax(p.x, q.x);
        return lo < r.x && r.x < hi;
    }
    auto [lo, hi] = std::minmax(p.y, q.y);
    return lo < r.y && r.y < hi;
}

LineKey line_through(const Point& p, const Point& q) {
    // a*x + b*y + c = 0 through both points, then cleared to a primitive
    // sign-canonical integer triple.
    Rational a = p.y - q.y;
    Rational b = q.x - p.x;
    Rational c = p.x * q.y - q.x * p.y;
    Integer den(1);
    for (const Rational* v : {&a, &b, &c}) den = lcm(den, v->get_den());
    Integer ia = a.get_num() * (den / a.get_den());
    Integer ib = b.get_num() * (den / b.get_den());
    Integer ic = c.get_num() * (den / c.get_den());
    Integer g = gcd(gcd(ia, ib), ic);
    if (g == 0) throw std::invalid_argument("line through identical points");
    ia /= g;
    ib /= g;
    ic /= g;
    int lead = sign(ia) != 0 ? sign(ia) : sign(ib);
    if (lead < 0) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return {ia, ib, ic};
}

LineStats enumerate_lines(const PointSet& A) {
    int n = A.size();
    if (n < 2) throw TooFewPoints("enumerate_lines needs at least 2 points");
    std::map<LineKey, std::set<int>> classes;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto& members = classes[line_through(A[i], A[j])];
            members.insert(i);
            members.insert(j);
        }
    LineStats st;
    for (auto& [key, members] : classes) {
        int sz = static_cast<int>(members.size());
        st.histogram[sz]++;
        if (sz == 2) st.t2++;
        if (sz >= 3) st.rich_lines.emplace(key, std::vector<int>(members.begin(), members.end()));
    }
    return st;
}

int max_collinear(const PointSet& A) {
    if (A.size() == 0) throw TooFewPoints("max_collinear needs at least 1 point");
    if (A.size() == 1) return 1;
    auto st = enumerate_lines(A);
    return st.histogram.rbegin()->first;
}

}  // namespace vis
