#include "vis/patches.hpp"

#include <algorithm>

namespace vis {

int sign_at_alg(const UniPoly& u, const AlgReal& a) {
    if (u.is_zero()) return 0;
    if (a.is_rational()) return u.sign_at(a.rational_value());
    if (poly_vanishes_at(u, a)) return 0;
    AlgReal t = a;
    for (;;) {
        RatInterval iv = iv_eval(u, {t.lower(), t.upper()});
        if (!iv.contains_zero()) return sign(iv.lo) != 0 ? sign(iv.lo) : sign(iv.hi);
        t.tighten((t.upper() - t.lower()) / 2);
    }
}

static UniPoly compose(const UniPoly& outer, const UniPoly& inner) {
    UniPoly acc;
    for (int i = outer.degree(); i >= 0; --i)
        acc = acc * inner + UniPoly::constant(outer[i]);
    return acc;
}

// Distinct real roots of s that are <= mu, via Sturm on (-B, mu].
static int count_roots_leq(const std::vector<UniPoly>& seq, const Rational& bound_lo,
                           const Rational& mu) {
    if (mu <= bound_lo) return 0;
    return sturm_count(seq, bound_lo, mu);
}

namespace {

struct SectionCounter {
    std::vector<UniPoly> seq;
    Rational lo;
    int total;

    explicit SectionCounter(const UniPoly& s) {
        if (s.is_zero() || s.degree() < 1) {
            total = 0;
            return;
        }
        seq = sturm_sequence(s);
        lo = -root_bound(s);
        total = sturm_count_all(seq);
    }
    int leq(const Rational& mu) const {
        return seq.empty() ? 0 : count_roots_leq(seq, lo, mu);
    }
};

}  // namespace

static void check_section_squarefree(const UniPoly& s, const char* where) {
    if (s.is_zero()) throw InconsistentExceptionalSet(std::string(where) + ": zero section");
    if (s.degree() >= 1 && UniPoly::gcd(s, s.derivative()).degree() > 0)
        throw InconsistentExceptionalSet(std::string(where) +
                                         ": tangential section off the cut set");
}

PatchDecomposition decompose(const HomogeneousCubic& F, const ExceptionalSet& E) {
    PatchDecomposition D;
    D.f = F.affine();
    D.E = E;
    if (E.chart == Chart::Sheared && F.coeff(0, 3, 0) == 0)
        throw InconsistentExceptionalSet("sheared exceptional set for an unsheared cubic");
    D.exc_affine = E.all_affine();
    for (const auto& p : D.exc_affine) {
        if (p.x.is_rational() && p.y.is_rational()) {
            if (D.f.eval(p.x.rational_value(), p.y.rational_value()) != 0)
                throw InconsistentExceptionalSet("exceptional point off the curve");
            continue;
        }
        AlgReal x = p.x, y = p.y;
        for (int step = 0; step < 64; ++step) {
            RatInterval iv = iv_eval(D.f, {x.lower(), x.upper()}, {y.lower(), y.upper()});
            if (!iv.contains_zero())
                throw InconsistentExceptionalSet("exceptional point off the curve");
            if (x.is_rational() && y.is_rational()) break;
            x.tighten((x.upper() - x.lower()) / 2);
            y.tighten((y.upper() - y.lower()) / 2);
        }
    }

    // Cuts: affine exceptional x-coordinates plus branch-escape abscissas.
    std::vector<AlgReal> cuts;
    for (const auto& p : D.exc_affine) cuts.push_back(p.x);
    UniPoly lc = D.f.coeff_y(D.f.degree_y());
    if (lc.degree() >= 1)
        for (const auto& r : sturm_isolate(lc)) cuts.emplace_back(r);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](const AlgReal& a, const AlgReal& b) { return a == b; }),
               cuts.end());
    D.cut_xs = cuts;

    int m = static_cast<int>(cuts.size());
    for (int j = 0; j <= m; ++j) {
        Rational q;
        if (m == 0)
            q = 0;
        else if (j == 0)
            q = cuts[0].lower() - 1;
        else if (j == m)
            q = cuts[m - 1].upper() + 1;
        else
            q = rational_between(cuts[j - 1], cuts[j]);
        UniPoly s = D.f.eval_x(q);
        check_section_squarefree(s, "interval probe");
        D.probes.push_back(q);
        D.branch_counts.push_back(s.degree() >= 1 ? sturm_count_all(sturm_sequence(s)) : 0);
    }

    // Union-find over cells.
    std::map<std::pair<int, int>, int> cell_index;
    std::vector<int> parent;
    auto cell_id = [&](int j, int r) {
        auto [it, inserted] = cell_index.try_emplace({j, r}, static_cast<int>(parent.size()));
        if (inserted) parent.push_back(it->second);
        return it->second;
    };
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int j = 0; j <= m; ++j)
        for (int r = 0; r < D.branch_counts[j]; ++r) cell_id(j, r);

    auto is_exceptional = [&](const AlgReal& x, const AlgReal& y) {
        AlgebraicPoint pt;
        pt.x = x;
        pt.y = y;
        for (const auto& e : D.exc_affine)
            if (same_point(pt, e)) return true;
        return false;
    };

    for (int j = 0; j < m; ++j) {
        const AlgReal& c = cuts[j];
        // All real curve points above the cut abscissa.
        std::vector<AlgReal> ys;
        if (c.is_rational()) {
            UniPoly s = D.f.eval_x(c.rational_value());
            if (s.is_zero())
                throw InconsistentExceptionalSet("vertical line inside the curve");
            if (s.degree() >= 1)
                for (const auto& r : sturm_isolate(s)) ys.emplace_back(r);
        } else {
            BiPoly P;
            for (int i = 0; i <= c.root().poly.degree(); ++i)
                P = P + BiPoly::term(i, 0, c.root().poly[i]);
            for (auto& sol : solve_system2(D.f, P))
                if (sol.x == c) ys.push_back(sol.y);
        }
        if (ys.empty()) continue;
        std::sort(ys.begin(), ys.end());
        int t = static_cast<int>(ys.size());

        std::vector<Rational> sep(t + 1);
        sep[0] = ys.front().lower() - 1;
        for (int i = 1; i < t; ++i) sep[i] = rational_between(ys[i - 1], ys[i]);
        sep[t] = ys.back().upper() + 1;

        // A probe valid up to the cut: past every crossing of the separator
        // levels, so per-slot branch counts are the counts at the limit.
        std::vector<AlgReal> level_roots;
        for (const Rational& mu : sep) {
            UniPoly g = D.f.eval_y(mu);
            if (g.is_zero())
                throw InconsistentExceptionalSet("horizontal line inside the curve");
            if (g.degree() >= 1)
                for (const auto& r : sturm_isolate(g)) level_roots.emplace_back(r);
        }
        std::optional<AlgReal> lb, ub;
        if (j > 0) lb = cuts[j - 1];
        if (j + 1 < m) ub = cuts[j + 1];
        for (const auto& r : level_roots) {
            if (r < c && (!lb || *lb < r)) lb = r;
            if (c < r && (!ub || r < *ub)) ub = r;
        }
        Rational qL = lb ? rational_between(*lb, c) : c.lower() - 1;
        Rational qR = ub ? rational_between(c, *ub) : c.upper() + 1;

        SectionCounter left(D.f.eval_x(qL)), right(D.f.eval_x(qR));
        if (left.total != D.branch_counts[j] || right.total != D.branch_counts[j + 1])
            throw std::logic_error("branch count changed inside an interval");

        for (int i = 0; i < t; ++i) {
            if (is_exceptional(c, ys[i])) continue;
            int nL = left.leq(sep[i + 1]) - left.leq(sep[i]);
            int nR = right.leq(sep[i + 1]) - right.leq(sep[i]);
            if (nL != 1 || nR != 1)
                throw std::logic_error("non-exceptional meeting point without 1+1 branches");
            int rankL = left.leq(sep[i]), rankR = right.leq(sep[i]);
            D.merges.push_back({j, ys[i], rankL, rankR});
            int a = find(cell_id(j, rankL)), b = find(cell_id(j + 1, rankR));
            parent[a] = b;
        }
    }

    // Components, in order of first (interval, rank) appearance.
    std::map<int, int> comp_patch;
    for (auto& [cell, idx] : cell_index) {
        int root = find(idx);
        auto [it, inserted] = comp_patch.try_emplace(root, static_cast<int>(D.patches.size()));
        if (inserted) D.patches.emplace_back();
        D.patches[it->second].cells.push_back(cell);
        D.cell_patch[cell] = it->second;
    }

    // Convexity sign: constant and nonzero across each patch.
    BiPoly fx = D.f.dx(), fy = D.f.dy();
    BiPoly N = (fx.dx() * fy * fy - fx.dy() * fx * fy * Rational(2) + fy.dy() * fx * fx) *
               Rational(-1);
    for (auto& patch : D.patches) {
        for (auto& [j, r] : patch.cells) {
            UniPoly s = D.f.eval_x(D.probes[j]);
            auto roots = sturm_isolate(s);
            AlgReal y(roots[r]);
            int sgn = sign_at_alg(N.eval_x(D.probes[j]), y) *
                      sign_at_alg(fy.eval_x(D.probes[j]), y);
            if (sgn == 0) throw std::logic_error("flex inside a patch");
            if (patch.convexity == 0)
                patch.convexity = sgn;
            else if (patch.convexity != sgn)
                throw std::logic_error("convexity sign changed inside a patch");
        }
    }

    if (E.chart == Chart::Sheared && D.patches.size() > 15)
        throw std::logic_error("sheared chart exceeded 15 patches");
    return D;
}

Assignment assign_point(const PatchDecomposition& D, const Point& p) {
    Assignment a;
    if (D.f.eval(p.x, p.y) != 0) {
        a.kind = AssignKind::NotOnCurve;
        return a;
    }
    for (size_t i = 0; i < D.exc_affine.size(); ++i)
        if (D.exc_affine[i].x.compare(p.x) == Cmp::Equal &&
            D.exc_affine[i].y.compare(p.y) == Cmp::Equal) {
            a.kind = AssignKind::Exceptional;
            a.exceptional = static_cast<int>(i);
            return a;
        }
    int m = static_cast<int>(D.cut_xs.size());
    for (int j = 0; j < m; ++j)
        if (D.cut_xs[j].compare(p.x) == Cmp::Equal) {
            for (const auto& rec : D.merges)
                if (rec.cut == j && rec.y.compare(p.y) == Cmp::Equal) {
                    a.kind = AssignKind::Patch;
                    a.patch = D.cell_patch.at({j, rec.left_rank});
                    return a;
                }
            throw std::logic_error("curve point on a cut with no continuation");
        }
    int j = 0;
    while (j < m && D.cut_xs[j].compare(p.x) == Cmp::Less) ++j;
    SectionCounter cnt(D.f.eval_x(p.x));
    int rank = cnt.leq(p.y) - 1;
    a.kind = AssignKind::Patch;
    a.patch = D.cell_patch.at({j, rank});
    return a;
}

ChordCertificate certify_patch_chord(const PatchDecomposition& D, int patch, const Point& p,
                                     const Point& q) {
    if (p == q) throw std::invalid_argument("chord endpoints must differ");
    Assignment ap = assign_point(D, p), aq = assign_point(D, q);
    if (ap.kind != AssignKind::Patch || aq.kind != AssignKind::Patch)
        throw PointsNotOnPatch("chord endpoints must lie on patches");
    (void)patch;
    UniPoly xt({p.x, q.x - p.x}), yt({p.y, q.y - p.y});
    UniPoly g;
    for (int jy = D.f.degree_y(); jy >= 0; --jy)
        g = g * yt + compose(D.f.coeff_y(jy), xt);
    if (g.is_zero()) throw std::logic_error("segment lies inside the curve");
    auto seq = sturm_sequence(g);
    int inside = sturm_count(seq, Rational(0), Rational(1));
    if (g.sign_at(Rational(1)) == 0) --inside;
    ChordCertificate cert;
    cert.interior_roots = inside;
    cert.empty_interior = inside == 0;
    return cert;
}

}  // namespace vis
