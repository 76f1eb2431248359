#include "vis/container.hpp"

#include <algorithm>
#include <random>

namespace vis {

static void hard_assert(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

Rational bound_formula(long n, long s, long k) {
    if (n < 1 || s < 0 || k < 2) throw std::invalid_argument("bound_formula domain");
    Rational first = Rational(n - s - (k - 1)) / Rational(s + k);
    Rational second = Rational(n - s - 13) / Rational(15 * (s + 1));
    Rational m = std::min(first, second);
    return std::max(Rational(1), m);
}

Rational density_constant_kl(long k, long l) {
    if (k < 3 || l < 2) throw std::invalid_argument("density_constant_kl domain");
    long choose = (k - 1) * (k - 2) / 2;
    return Rational(1) / Rational(4 * (l - 1) * choose);
}

Rational density_constant_dl(long d, long l) {
    if (d < 2 || l < 2) throw std::invalid_argument("density_constant_dl domain");
    long choose = d * (d - 1) / 2;
    return Rational(1) / Rational(8 * (l - 1) * choose);
}

static long ceil_to_long(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c.get_si();
}

static CliqueCover empty_cover() {
    CliqueCover c;
    c.certified = true;
    c.matchings_ok = true;
    return c;
}

// Appends src's parts into dst and widens its bookkeeping.
static void absorb(CliqueCover& dst, const CliqueCover& src) {
    for (const auto& part : src.parts) dst.parts.push_back(part);
    for (int i : src.scope) dst.scope.push_back(i);
    dst.certified = dst.certified && src.certified;
    dst.b = std::max(dst.b, src.b);
    dst.max_degree_h = std::max(dst.max_degree_h, src.max_degree_h);
    dst.matchings_ok = dst.matchings_ok && src.matchings_ok;
}

static void add_singleton(CliqueCover& dst, int i) {
    dst.parts.push_back({i});
    dst.scope.push_back(i);
}

ContainerReport cubic_container(const PointSet& A, const HomogeneousCubic& F, int k,
                                long long clique_budget) {
    if (k < 2) throw std::invalid_argument("k >= 2 required");
    if (A.size() >= 2 && max_collinear(A) >= k)
        throw std::invalid_argument("k or more collinear points present");

    ContainerReport rep;
    rep.n = A.size();
    BiPoly f = F.affine();
    std::vector<bool> on_curve(rep.n);
    for (int i = 0; i < rep.n; ++i) {
        on_curve[i] = f.eval(A[i].x, A[i].y) == 0;
        if (on_curve[i]) ++rep.m;
    }
    rep.s = rep.n - rep.m;

    auto cls = classify(F);
    rep.tag = cls.tag;
    if (cls.tag == CubicTag::ThreeLines) throw ThreeLinesExcluded();
    if (cls.tag == CubicTag::Unclassified)
        throw NotIrreducibleOrDecomposable(cls.reason);
    if (rep.m <= 3 * (k - 1))
        throw TooFewOnCubic("need more than 3(k-1) points on the curve");

    CliqueCover cover = empty_cover();
    if (cls.tag == CubicTag::LineConic) {
        const TriPoly& Q = cls.conic;
        const TriPoly& L = cls.lines[0];
        std::vector<int> on_conic, line_only;
        for (int i = 0; i < rep.n; ++i) {
            if (!on_curve[i]) continue;
            bool q = Q.eval(A[i].x, A[i].y, 1) == 0;
            bool l = L.eval(A[i].x, A[i].y, 1) == 0;
            if (l) ++rep.a;
            if (q)
                on_conic.push_back(i);  // L∩Q points travel with the conic part
            else
                line_only.push_back(i);
        }
        if (!on_conic.empty()) {
            auto conic_cover = blocker_colouring_cover(A, on_conic);
            hard_assert(static_cast<int>(conic_cover.parts.size()) <= rep.s + rep.a + 1,
                        "conic cover exceeded s+a+1 parts");
            absorb(cover, conic_cover);
        }
        for (int i : line_only) add_singleton(cover, i);
        rep.cover_bound_claimed = rep.s + 2 * rep.a + 1;
        hard_assert(static_cast<int>(cover.parts.size()) <= rep.cover_bound_claimed,
                    "line+conic cover exceeded s+2a+1 parts");
    } else {
        auto sh = shear_to_generic(F);
        std::vector<Point> pts;
        pts.reserve(rep.n);
        for (const auto& p : A.points()) pts.push_back({p.x - sh.lambda * p.y, p.y});
        PointSet A2(std::move(pts), A.label());
        auto D = decompose(sh.sheared, exceptional_set(sh.sheared, Chart::Sheared));

        std::map<int, std::vector<int>> by_patch;
        std::vector<int> exceptional;
        for (int i = 0; i < rep.n; ++i) {
            if (!on_curve[i]) continue;
            auto asg = assign_point(D, A2[i]);
            hard_assert(asg.kind != AssignKind::NotOnCurve,
                        "curve membership changed under shear");
            if (asg.kind == AssignKind::Exceptional)
                exceptional.push_back(i);
            else
                by_patch[asg.patch].push_back(i);
        }
        for (auto& [patch, idx] : by_patch) {
            auto patch_cover = blocker_colouring_cover(A2, idx);
            hard_assert(patch_cover.b <= rep.s,
                        "a within-patch blocker lies on the curve");
            hard_assert(static_cast<int>(patch_cover.parts.size()) <= rep.s + 1,
                        "patch cover exceeded s+1 parts");
            absorb(cover, patch_cover);
        }
        for (int i : exceptional) add_singleton(cover, i);
        rep.cover_bound_claimed = 15 * (rep.s + 1) + 13;
        hard_assert(static_cast<int>(cover.parts.size()) <= rep.cover_bound_claimed,
                    "cubic cover exceeded 15(s+1)+13 parts");
    }
    std::sort(cover.scope.begin(), cover.scope.end());
    bool recertified = recertify_cover(A, cover);
    cover.certified = cover.certified && recertified;
    rep.cover = cover;

    rep.omega_lower_bound = bound_formula(rep.n, rep.s, k);
    auto cl = max_visible_clique(visibility_graph(A), clique_budget);
    rep.realized_clique = cl.clique;
    bool clique_ok =
        static_cast<long>(cl.clique.size()) >= ceil_to_long(rep.omega_lower_bound);

    rep.certificates.push_back({"cover-parts-bound", true});
    rep.certificates.push_back({"cover-recertified", recertified});
    rep.certificates.push_back({"realized-clique-meets-bound", clique_ok});
    rep.success = cover.certified && recertified && clique_ok;
    return rep;
}

TuranReport turan_identities(const PointSet& A, long long clique_budget) {
    TuranReport rep;
    rep.n = A.size();
    if (rep.n >= 2 && max_collinear(A) > 3) throw NoFourCollinearRequired();

    long long pairs = static_cast<long long>(rep.n) * (rep.n - 1) / 2;
    if (rep.n >= 2) {
        auto stats = enumerate_lines(A);
        rep.t2 = stats.t2;
        auto it = stats.histogram.find(3);
        rep.t3 = it == stats.histogram.end() ? 0 : it->second;
    }
    auto G = visibility_graph(A);
    rep.e = G.edge_count();
    if (pairs != rep.t2 + 3 * rep.t3) throw std::logic_error("pair identity failed");
    if (rep.e != rep.t2 + 2 * rep.t3) throw std::logic_error("edge identity failed");
    rep.identities_checked = true;

    auto cl = max_visible_clique(G, clique_budget);
    if (static_cast<int>(cl.clique.size()) >= 4)
        rep.clique_below_four = false;
    else if (cl.optimal) {
        rep.clique_below_four = true;
        if (rep.t2 > rep.n) throw std::logic_error("ordinary-line bound t2 <= n failed");
        rep.ordinary_bound_checked = true;
    }
    return rep;
}

// Unique-up-to-scale nullvector of a 9x10 rational matrix, or nullopt when
// the nullspace has dimension above one.
static std::optional<std::array<Rational, 10>> nullvector(
    std::vector<std::array<Rational, 10>> M) {
    constexpr int cols = 10;
    int rows = static_cast<int>(M.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[r], M[sel]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational factor = M[i][c] / M[r][c];
            for (int j = c; j < cols; ++j) M[i][j] -= factor * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < 9) return std::nullopt;  // nullspace dimension >= 2
    int free_col = -1;
    for (int c = 0, pi = 0; c < cols; ++c) {
        if (pi < r && pivot_col[pi] == c)
            ++pi;
        else
            free_col = c;
    }
    std::array<Rational, 10> v;
    v.fill(Rational(0));
    v[free_col] = 1;
    for (int i = r - 1; i >= 0; --i) {
        Rational sum = M[i][free_col];
        v[pivot_col[i]] = -sum / M[i][pivot_col[i]];
    }
    return v;
}

CubicFit fit_cubic(const PointSet& A, int trials, uint64_t seed) {
    if (A.size() < 10) throw std::invalid_argument("fit_cubic needs at least 10 points");
    CubicFit best;
    std::mt19937_64 rng(seed);
    std::vector<int> idx(A.size());
    for (int i = 0; i < A.size(); ++i) idx[i] = i;
    const auto& order = HomogeneousCubic::coeff_order();

    for (int trial = 0; trial < trials; ++trial) {
        ++best.trials_used;
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<std::array<Rational, 10>> M(9);
        for (int r = 0; r < 9; ++r) {
            const Point& p = A[idx[r]];
            for (int c = 0; c < 10; ++c) {
                auto [i, j, k] = order[c];
                Rational mono(1);
                for (int t = 0; t < i; ++t) mono *= p.x;
                for (int t = 0; t < j; ++t) mono *= p.y;
                (void)k;  // Z = 1
                M[r][c] = mono;
            }
        }
        auto v = nullvector(std::move(M));
        if (!v) {
            ++best.degenerate_samples;
            continue;
        }
        HomogeneousCubic F = HomogeneousCubic::from_coeffs(*v);
        BiPoly f = F.affine();
        int s = 0;
        for (const auto& p : A.points())
            if (f.eval(p.x, p.y) != 0) ++s;
        if (!best.F || s < best.s) {
            best.F = F;
            best.s = s;
            if (s == 0) break;
        }
    }
    return best;
}

AmbientReport ambient_container_check(const PointSet& A, const HomogeneousCubic& F,
                                      int patch_id, const Rational& alpha,
                                      const Rational& beta) {
    if (!(alpha > 0) || !(beta > 0))
        throw std::invalid_argument("alpha and beta must be positive");
    AmbientReport rep;
    rep.n = A.size();
    BiPoly f = F.affine();

    std::vector<int> W;
    auto cls = classify(F);
    if (cls.tag == CubicTag::LineConic) {
        if (patch_id != 0) throw UnknownPatch("line+conic curves expose only patch 0");
        for (int i = 0; i < rep.n; ++i)
            if (cls.conic.eval(A[i].x, A[i].y, 1) == 0) W.push_back(i);
    } else if (cls.tag == CubicTag::Irreducible) {
        auto sh = shear_to_generic(F);
        auto D = decompose(sh.sheared, exceptional_set(sh.sheared, Chart::Sheared));
        if (patch_id < 0 || patch_id >= static_cast<int>(D.patches.size()))
            throw UnknownPatch("patch id out of range");
        for (int i = 0; i < rep.n; ++i) {
            Point p2{A[i].x - sh.lambda * A[i].y, A[i].y};
            auto asg = assign_point(D, p2);
            if (asg.kind == AssignKind::Patch && asg.patch == patch_id) W.push_back(i);
        }
    } else {
        throw NotIrreducibleOrDecomposable("curve is neither irreducible nor line+conic");
    }

    rep.patch_size = static_cast<int>(W.size());
    rep.size_ok = Rational(rep.patch_size) >= alpha * Rational(rep.n);
    if (rep.patch_size >= 2) {
        auto blockers = blocker_set(A, W);
        for (int i : blockers.indices)
            if (f.eval(A[i].x, A[i].y) != 0) ++rep.ambient_blockers;
    }
    rep.blockers_ok = Rational(rep.ambient_blockers) <= beta * Rational(rep.patch_size);
    Rational m(rep.patch_size);
    rep.clique_lower = m / (beta * m + 1);
    return rep;
}

}  // namespace vis
