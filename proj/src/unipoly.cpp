#include "vis/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace vis {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& a) {
    if (a == 0) return UniPoly();
    return UniPoly(std::vector<Rational>{a});
}

UniPoly UniPoly::monomial(int deg, const Rational& a) {
    if (a == 0) return UniPoly();
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = a;
    return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int UniPoly::sign_at_pos_inf() const {
    if (is_zero()) return 0;
    return sign(leading());
}

int UniPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sign(leading());
    return (degree() % 2 == 0) ? s : -s;
}

UniPoly UniPoly::derivative() const {
    if (degree() <= 0) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::negate() const {
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b.negate(); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db) return {UniPoly(), a};
    std::vector<Rational> quot(da - db + 1, Rational(0));
    for (int i = da; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / b.leading();
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::div_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

UniPoly UniPoly::square_free_part() const {
    if (is_zero()) throw ZeroPolynomial();
    if (degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return monic();
    return div_exact(*this, g).monic();
}

std::vector<std::pair<UniPoly, int>> UniPoly::square_free_decomposition() const {
    // Yun's algorithm over Q.
    if (is_zero()) throw ZeroPolynomial();
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = monic();
    if (f.degree() == 0) return out;
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = div_exact(f, a);
    UniPoly c = div_exact(fp, a);
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly ai = gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = div_exact(b, ai);
        c = div_exact(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return *this;
    Integer den_lcm(1);
    for (const auto& q : c_) den_lcm = lcm(den_lcm, q.get_den());
    Integer content(0);
    for (const auto& q : c_) {
        Integer scaled = q.get_num() * (den_lcm / q.get_den());
        content = ::gcd(content, scaled);
    }
    if (content == 0) content = 1;
    Rational scale(den_lcm, content);
    scale.canonicalize();
    UniPoly out = *this * scale;
    if (sign(out.leading()) < 0) out = out.negate();
    return out;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << (sign(c_[i]) > 0 ? " + " : " - ");
        else if (sign(c_[i]) < 0) os << "-";
        Rational mag = abs(Rational(c_[i]));
        if (mag != 1 || i == 0) os << to_string(mag);
        if (i >= 1) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    seq.push_back(p);
    UniPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        const UniPoly& a = seq[seq.size() - 2];
        const UniPoly& b = seq[seq.size() - 1];
        UniPoly r = UniPoly::divrem(a, b).second;
        if (r.is_zero()) break;
        seq.push_back(r.negate().primitive_part() * Rational(1));
        // primitive_part normalizes magnitude but must keep the sign of -r
        if (sign(seq.back().leading()) != -sign(r.leading()))
            seq.back() = seq.back().negate();
    }
    return seq;
}

int sign_variations_at(const std::vector<UniPoly>& seq, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

static int sign_variations_inf(const std::vector<UniPoly>& seq, bool pos) {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        int s = pos ? p.sign_at_pos_inf() : p.sign_at_neg_inf();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sturm_count(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b) {
    return sign_variations_at(seq, a) - sign_variations_at(seq, b);
}

int sturm_count_all(const std::vector<UniPoly>& seq) {
    return sign_variations_inf(seq, false) - sign_variations_inf(seq, true);
}

Rational root_bound(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    Rational m(0);
    Rational lead = abs(Rational(p.leading()));
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(Rational(p[i])) / lead;
        if (r > m) m = r;
    }
    return m + 1;
}

static void isolate_square_free(const UniPoly& q, int multiplicity,
                                std::vector<IsolatedRoot>& out) {
    if (q.degree() <= 0) return;
    auto seq = sturm_sequence(q);
    Rational bound = root_bound(q);
    struct Range {
        Rational lo, hi;
        int count;
    };
    std::vector<Range> stack;
    int total = sturm_count(seq, -bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Range r = stack.back();
        stack.pop_back();
        if (r.count == 1) {
            out.push_back({q, r.lo, r.hi, multiplicity});
            continue;
        }
        Rational mid = (r.lo + r.hi) / 2;
        int left = sturm_count(seq, r.lo, mid);
        if (left > 0) stack.push_back({r.lo, mid, left});
        if (r.count - left > 0) stack.push_back({mid, r.hi, r.count - left});
    }
}

static bool overlap(const IsolatedRoot& a, const IsolatedRoot& b) {
    return !(a.hi <= b.lo || b.hi <= a.lo);
}

static void halve(IsolatedRoot& r) {
    r = refine(r, (r.hi - r.lo) / 2);
}

std::vector<IsolatedRoot> sturm_isolate(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<IsolatedRoot> roots;
    for (const auto& [factor, mult] : p.square_free_decomposition())
        isolate_square_free(factor, mult, roots);
    // Roots of distinct Yun factors are distinct; separate their intervals.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                if (overlap(roots[i], roots[j])) {
                    halve(roots[i]);
                    halve(roots[j]);
                    changed = true;
                }
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.hi <= b.lo; });
    return roots;
}

IsolatedRoot refine(const IsolatedRoot& r, const Rational& width) {
    if (width <= 0) throw std::invalid_argument("refine width must be positive");
    IsolatedRoot out = r;
    if (out.hi - out.lo <= width) return out;
    std::vector<UniPoly> seq;  // built lazily, only for boundary cases
    while (out.hi - out.lo > width) {
        Rational mid = (out.lo + out.hi) / 2;
        int smid = out.poly.sign_at(mid);
        if (smid == 0) {
            // The root is exactly mid; clamp around it.
            Rational lo = mid - width / 2;
            if (lo < out.lo) lo = out.lo;
            out.lo = lo;
            out.hi = mid;
            break;
        }
        int slo = out.poly.sign_at(out.lo);
        if (slo != 0 && smid != slo) {
            out.hi = mid;  // sign change in (lo, mid)
        } else if (slo != 0 && out.poly.sign_at(out.hi) != 0) {
            out.lo = mid;  // simple interior root, sign change in (mid, hi)
        } else {
            if (seq.empty()) seq = sturm_sequence(out.poly);
            if (sturm_count(seq, out.lo, mid) == 1)
                out.hi = mid;
            else
                out.lo = mid;
        }
    }
    return out;
}

Cmp compare_root_rational(const IsolatedRoot& r, const Rational& q) {
    if (q <= r.lo) return Cmp::Greater;  // root > lo >= q
    if (q >= r.hi) {
        if (q == r.hi && r.poly.sign_at(q) == 0) return Cmp::Equal;
        return Cmp::Less;  // root <= hi <= q, root != q
    }
    if (r.poly.sign_at(q) == 0) return Cmp::Equal;
    auto seq = sturm_sequence(r.poly);
    return sturm_count(seq, r.lo, q) == 1 ? Cmp::Less : Cmp::Greater;
}

AlgReal::AlgReal(IsolatedRoot r) : rational_(false), value_(0), root_(std::move(r)) {
    // Degree-1 isolating polynomials designate a rational; store it directly.
    if (root_.poly.degree() == 1) {
        Rational v = -root_.poly[0] / root_.poly[1];
        rational_ = true;
        value_ = v;
    } else if (root_.poly.sign_at(root_.hi) == 0) {
        // Half-open brackets (lo, hi] land exactly on a root when bisection
        // hits it; normalise to the rational representation.
        rational_ = true;
        value_ = root_.hi;
    }
}

Cmp AlgReal::compare(const Rational& q) const {
    if (rational_) {
        if (value_ < q) return Cmp::Less;
        if (value_ == q) return Cmp::Equal;
        return Cmp::Greater;
    }
    return compare_root_rational(root_, q);
}

Cmp AlgReal::compare(const AlgReal& o) const {
    if (o.rational_) return compare(o.value_);
    if (rational_) {
        Cmp c = o.compare(value_);
        return c == Cmp::Less ? Cmp::Greater : c == Cmp::Greater ? Cmp::Less : Cmp::Equal;
    }
    // Both are genuine algebraic roots: decide equality via a common factor,
    // then separate intervals.
    UniPoly g = UniPoly::gcd(root_.poly, o.root_.poly);
    if (g.degree() > 0) {
        Rational lo = std::max(root_.lo, o.root_.lo);
        Rational hi = std::min(root_.hi, o.root_.hi);
        if (lo < hi) {
            auto seq = sturm_sequence(g);
            if (sturm_count(seq, lo, hi) >= 1) return Cmp::Equal;
        } else if (lo == hi && g.sign_at(hi) == 0 && root_.hi >= hi && o.root_.hi >= hi &&
                   root_.poly.sign_at(hi) == 0 && o.root_.poly.sign_at(hi) == 0) {
            // Shared root exactly at the common endpoint.
            if (compare_root_rational(root_, hi) == Cmp::Equal &&
                compare_root_rational(o.root_, hi) == Cmp::Equal)
                return Cmp::Equal;
        }
    }
    // Distinct values: refine until the brackets are disjoint.
    while (!(root_.hi <= o.root_.lo || o.root_.hi <= root_.lo)) {
        halve(root_);
        halve(o.root_);
    }
    return root_.hi <= o.root_.lo ? Cmp::Less : Cmp::Greater;
}

void AlgReal::tighten(const Rational& width) {
    if (!rational_) root_ = refine(root_, width);
}

std::string AlgReal::str() const {
    if (rational_) return to_string(value_);
    std::ostringstream os;
    os << "root(" << root_.poly.str() << ", (" << to_string(root_.lo) << ", "
       << to_string(root_.hi) << "])";
    return os.str();
}

Rational rational_between(const AlgReal& a, const AlgReal& b) {
    if (a.is_rational() && b.is_rational()) {
        if (!(a.rational_value() < b.rational_value()))
            throw std::invalid_argument("rational_between requires a < b");
        return (a.rational_value() + b.rational_value()) / 2;
    }
    AlgReal x = a, y = b;
    while (true) {
        Rational xu = x.is_rational() ? x.rational_value() : x.upper();
        Rational yl = y.is_rational() ? y.rational_value() : y.lower();
        if (xu < yl) return (xu + yl) / 2;
        Rational wx = x.upper() - x.lower();
        Rational wy = y.upper() - y.lower();
        if (wx == 0 && wy == 0)
            throw std::invalid_argument("rational_between requires a < b");
        if (wx > 0) x.tighten(wx / 2);
        if (wy > 0) y.tighten(wy / 2);
    }
}

}  // namespace vis
