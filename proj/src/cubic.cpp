#include "vis/cubic.hpp"

#include <sstream>

namespace vis {

static void hard_assert(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(msg);
}

HomogeneousCubic::HomogeneousCubic(const TriPoly& p) {
    if (p.is_zero() || p.total_degree() != 3 || !p.is_homogeneous(3)) throw NotACubic();
    f_ = p.primitive();
    // primitive() forces a positive lex-leading coefficient; keep the caller's
    // sign so Hessian identities hold for the form as written.
    if (sign(std::prev(p.terms().end())->second) < 0) f_ = f_ * Rational(-1);
}

const std::array<TriPoly::Key, 10>& HomogeneousCubic::coeff_order() {
    static const std::array<TriPoly::Key, 10> order{{{3, 0, 0},
                                                     {2, 1, 0},
                                                     {2, 0, 1},
                                                     {1, 2, 0},
                                                     {1, 1, 1},
                                                     {1, 0, 2},
                                                     {0, 3, 0},
                                                     {0, 2, 1},
                                                     {0, 1, 2},
                                                     {0, 0, 3}}};
    return order;
}

HomogeneousCubic HomogeneousCubic::from_coeffs(const std::array<Rational, 10>& c) {
    TriPoly p;
    const auto& order = coeff_order();
    for (size_t i = 0; i < 10; ++i)
        p = p + TriPoly::term(order[i][0], order[i][1], order[i][2], c[i]);
    return HomogeneousCubic(p);
}

TriPoly hessian(const HomogeneousCubic& F) {
    TriPoly d[3][3];
    for (int i = 0; i < 3; ++i) {
        TriPoly fi = F.form().partial(i);
        for (int j = 0; j < 3; ++j) d[i][j] = fi.partial(j);
    }
    return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
           d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
           d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

// P(t, y0, z0) as a polynomial in t.
static UniPoly restrict_line(const TriPoly& P, const Rational& y0, const Rational& z0) {
    std::vector<Rational> cs;
    for (const auto& [k, v] : P.terms()) {
        Rational t = v;
        for (int i = 0; i < k[1]; ++i) t *= y0;
        for (int i = 0; i < k[2]; ++i) t *= z0;
        if (static_cast<size_t>(k[0]) >= cs.size()) cs.resize(k[0] + 1, Rational(0));
        cs[k[0]] += t;
    }
    return UniPoly(std::move(cs));
}

static std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    return out;
}

// All rational roots, by the rational root theorem on the primitive part.
static std::vector<Rational> rational_roots(const UniPoly& p) {
    std::vector<Rational> out;
    if (p.is_zero() || p.degree() == 0) return out;
    UniPoly pp = p.primitive_part();
    std::vector<Rational> cs(pp.coeffs());
    while (!cs.empty() && cs.front() == 0) {
        cs.erase(cs.begin());
        if (out.empty()) out.emplace_back(0);
    }
    UniPoly q(std::move(cs));
    if (q.degree() <= 0) return out;
    Integer a0 = abs(q[0].get_num()), an = abs(q.leading().get_num());
    // trial-divisor enumeration; coefficients stay small at this degree
    if (a0 > Integer(1000000000000L) || an > Integer(1000000000000L)) return out;
    for (const Integer& num : positive_divisors(a0))
        for (const Integer& den : positive_divisors(an))
            for (int s : {1, -1}) {
                Rational r(s * num, den);
                r.canonicalize();
                if (q.sign_at(r) == 0 &&
                    std::find(out.begin(), out.end(), r) == out.end())
                    out.push_back(r);
            }
    return out;
}

// One rational linear factor of a homogeneous form, with its quotient.
static std::optional<std::pair<TriPoly, TriPoly>> split_linear(const TriPoly& F) {
    auto try_div = [&](const TriPoly& L) -> std::optional<std::pair<TriPoly, TriPoly>> {
        auto q = TriPoly::divide_exact(F, L);
        if (q) return std::make_pair(L.primitive(), *q);
        return std::nullopt;
    };
    TriPoly X = TriPoly::term(1, 0, 0, Rational(1));
    TriPoly Y = TriPoly::term(0, 1, 0, Rational(1));
    TriPoly Z = TriPoly::term(0, 0, 1, Rational(1));
    // Coordinate lines first: they also cover the degenerate root searches.
    for (const TriPoly& L : {Z, Y, X})
        if (auto r = try_div(L)) return r;
    // X + bY + cZ: b, c forced by the Y^d and Z^d coefficients of F|_{X=-bY-cZ}.
    std::vector<Rational> bs, cs;
    {
        UniPoly py = restrict_line(F, Rational(1), Rational(0));  // F(t,1,0)
        UniPoly pz = restrict_line(F, Rational(0), Rational(1));  // F(t,0,1)
        for (const Rational& r : rational_roots(py)) bs.push_back(-r);
        for (const Rational& r : rational_roots(pz)) cs.push_back(-r);
    }
    for (const Rational& b : bs)
        for (const Rational& c : cs)
            if (auto r = try_div(X + Y * b + Z * c)) return r;
    // Y + cZ (forms with no X^d term only).
    UniPoly pyz = [&] {
        std::vector<Rational> acc;
        for (const auto& [k, v] : F.terms()) {
            if (k[0] != 0) continue;
            if (static_cast<size_t>(k[1]) >= acc.size()) acc.resize(k[1] + 1, Rational(0));
            acc[k[1]] += v;  // coeff of t^j in F(0,t,1)
        }
        return UniPoly(std::move(acc));
    }();
    for (const Rational& r : rational_roots(pyz))
        if (auto q = try_div(Y + Z * (-r))) return q;
    return std::nullopt;
}

static Rational conic_det(const TriPoly& Q) {
    Rational a = Q.coeff(2, 0, 0), b = Q.coeff(0, 2, 0), c = Q.coeff(0, 0, 2);
    Rational d = Q.coeff(1, 1, 0) / 2, e = Q.coeff(1, 0, 1) / 2, f = Q.coeff(0, 1, 1) / 2;
    return a * (b * c - f * f) - d * (d * c - f * e) + e * (d * f - b * e);
}

static bool rational_coords(const AlgebraicPoint& p, Rational& x, Rational& y, Rational& z) {
    if (p.at_infinity) {
        if (p.dir_horizontal) {
            x = 1; y = 0; z = 0;
            return true;
        }
        if (!p.dir.is_rational()) return false;
        x = p.dir.rational_value(); y = 1; z = 0;
        return true;
    }
    if (!p.x.is_rational() || !p.y.is_rational()) return false;
    x = p.x.rational_value(); y = p.y.rational_value(); z = 1;
    return true;
}

std::vector<AlgebraicPoint> singular_points(const HomogeneousCubic& F) {
    TriPoly P[3] = {F.form().partial(0), F.form().partial(1), F.form().partial(2)};
    std::vector<AlgebraicPoint> out;

    // Affine chart z = 1.
    BiPoly a[3] = {P[0].dehom_z(), P[1].dehom_z(), P[2].dehom_z()};
    bool nonvanishing = false;
    for (const BiPoly& p : a)
        if (!p.is_zero() && p.total_degree() == 0) nonvanishing = true;
    if (!nonvanishing) {
        std::vector<const BiPoly*> nz;
        for (const BiPoly& p : a)
            if (!p.is_zero()) nz.push_back(&p);
        if (nz.size() < 2)
            throw CertificationFailure("singular locus is positive-dimensional");
        // Put a y-dependent equation first so elimination in y is possible.
        std::stable_sort(nz.begin(), nz.end(),
                         [](const BiPoly* l, const BiPoly* r) {
                             return l->degree_y() > r->degree_y();
                         });
        if (nz[0]->degree_y() == 0) {
            UniPoly g = nz[0]->coeff_y(0);
            for (size_t i = 1; i < nz.size(); ++i) g = UniPoly::gcd(g, nz[i]->coeff_y(0));
            if (g.degree() > 0)
                throw CertificationFailure("singular locus is positive-dimensional");
        } else {
            // Any pair works as long as the two equations share no component;
            // the remaining equations always ride along as filters.
            bool solved = false;
            for (size_t i = 0; i < nz.size() && !solved; ++i)
                for (size_t j = i + 1; j < nz.size() && !solved; ++j) {
                    if (nz[i]->degree_y() == 0 && nz[j]->degree_y() == 0) continue;
                    std::vector<BiPoly> filters;
                    for (size_t k = 0; k < nz.size(); ++k)
                        if (k != i && k != j) filters.push_back(*nz[k]);
                    try {
                        for (auto& s : solve_system2(*nz[i], *nz[j], filters)) {
                            AlgebraicPoint p;
                            p.x = s.x;
                            p.y = s.y;
                            out.push_back(p);
                        }
                        solved = true;
                    } catch (const CertificationFailure&) {
                    }
                }
            if (!solved)
                throw CertificationFailure("singular locus is positive-dimensional");
        }
    }

    // Line at infinity: directions [t:1:0] and [1:0:0].
    UniPoly u[3];
    bool all_zero = true;
    for (int i = 0; i < 3; ++i) {
        u[i] = restrict_line(P[i], Rational(1), Rational(0));
        if (!u[i].is_zero()) all_zero = false;
    }
    if (all_zero) throw CertificationFailure("singular locus is positive-dimensional");
    UniPoly g;
    for (int i = 0; i < 3; ++i)
        if (!u[i].is_zero()) g = g.is_zero() ? u[i] : UniPoly::gcd(g, u[i]);
    if (g.degree() > 0)
        for (const auto& r : sturm_isolate(g)) {
            AlgebraicPoint p;
            p.at_infinity = true;
            p.dir = AlgReal(r);
            out.push_back(p);
        }
    bool horiz_sing = true;
    for (int i = 0; i < 3; ++i)
        if (P[i].eval(Rational(1), Rational(0), Rational(0)) != 0) horiz_sing = false;
    if (horiz_sing) {
        AlgebraicPoint p;
        p.at_infinity = true;
        p.dir_horizontal = true;
        out.push_back(p);
    }
    return out;
}

CubicClassification classify(const HomogeneousCubic& F) {
    const TriPoly& f = F.form();
    if (auto s1 = split_linear(f)) {
        auto [L1, Q] = *s1;
        if (auto s2 = split_linear(Q)) {
            auto [L2, L3] = *s2;
            CubicClassification c{CubicTag::ThreeLines, {L1, L2, L3.primitive()}, {}, ""};
            hard_assert(TriPoly::proportional(c.lines[0] * c.lines[1] * c.lines[2], f),
                        "three-lines factors do not multiply back");
            return c;
        }
        if (conic_det(Q) != 0) {
            CubicClassification c{CubicTag::LineConic, {L1}, Q.primitive(), ""};
            hard_assert(TriPoly::proportional(c.lines[0] * c.conic, f),
                        "line-conic factors do not multiply back");
            return c;
        }
        return {CubicTag::Unclassified, {L1}, Q.primitive(),
                "conic factor splits only over an irrational extension"};
    }
    // No rational linear factor: the only real-reducible possibility left is
    // a union of conjugate real lines; its singular locus gives it away.
    std::vector<AlgebraicPoint> sing;
    try {
        sing = singular_points(F);
    } catch (const CertificationFailure& e) {
        return {CubicTag::Unclassified, {}, {}, e.what()};
    }
    if (sing.size() >= 2)
        return {CubicTag::Unclassified, {}, {},
                "multiple real singular points without a rational factor"};
    if (sing.size() == 1) {
        Rational x, y, z;
        if (rational_coords(sing[0], x, y, z)) {
            bool triple = true;
            for (int i = 0; i < 3 && triple; ++i)
                for (int j = i; j < 3 && triple; ++j)
                    if (F.form().partial(i).partial(j).eval(x, y, z) != 0) triple = false;
            if (triple)
                return {CubicTag::Unclassified, {}, {},
                        "rational triple point: concurrent conjugate lines"};
        }
    }
    return {CubicTag::Irreducible, {}, {}, ""};
}

ShearResult shear_to_generic(const HomogeneousCubic& F) {
    for (long lam = 0; lam <= 3; ++lam) {
        if (F.form().eval(Rational(lam), Rational(1), Rational(0)) == 0) continue;
        TriPoly X = TriPoly::term(1, 0, 0, Rational(1));
        TriPoly Y = TriPoly::term(0, 1, 0, Rational(1));
        TriPoly Z = TriPoly::term(0, 0, 1, Rational(1));
        TriPoly sheared = F.form().subst(X + Y * Rational(lam), Y, Z);
        return {Rational(lam), HomogeneousCubic(sheared)};
    }
    throw NoGenericShear();
}

std::string AlgebraicPoint::str() const {
    std::ostringstream os;
    if (at_infinity) {
        if (dir_horizontal) os << "[1:0:0]";
        else os << "[" << dir.str() << ":1:0]";
    } else {
        os << "(" << x.str() << ", " << y.str() << ")";
    }
    return os.str();
}

bool same_point(const AlgebraicPoint& a, const AlgebraicPoint& b) {
    if (a.at_infinity != b.at_infinity) return false;
    if (a.at_infinity) {
        if (a.dir_horizontal != b.dir_horizontal) return false;
        return a.dir_horizontal || a.dir == b.dir;
    }
    return a.x == b.x && a.y == b.y;
}

std::vector<AlgebraicPoint> ExceptionalSet::all_affine() const {
    std::vector<AlgebraicPoint> out;
    for (const auto* lst : {&e_sing, &e_vt, &e_fl})
        for (const auto& p : *lst)
            if (!p.at_infinity) {
                bool dup = false;
                for (const auto& q : out)
                    if (same_point(p, q)) dup = true;
                if (!dup) out.push_back(p);
            }
    return out;
}

ExceptionalSet exceptional_set(const HomogeneousCubic& F, Chart chart) {
    auto cls = classify(F);
    if (cls.tag != CubicTag::Irreducible)
        throw NotIrreducible("exceptional_set needs an irreducible cubic");
    if (chart == Chart::Sheared && F.coeff(0, 3, 0) == 0)
        throw NotIrreducible("sheared chart requires a nonzero Y^3 coefficient");

    ExceptionalSet E;
    E.chart = chart;

    UniPoly at_inf = restrict_line(F.form(), Rational(1), Rational(0));  // F(t,1,0)
    hard_assert(!at_inf.is_zero(), "irreducible cubic cannot contain the line at infinity");
    if (at_inf.degree() > 0)
        for (const auto& r : sturm_isolate(at_inf)) {
            AlgebraicPoint p;
            p.at_infinity = true;
            p.dir = AlgReal(r);
            E.e_inf.push_back(p);
        }
    if (F.coeff(3, 0, 0) == 0) {
        AlgebraicPoint p;
        p.at_infinity = true;
        p.dir_horizontal = true;
        E.e_inf.push_back(p);
    }

    E.e_sing = singular_points(F);

    auto contains = [](const std::vector<AlgebraicPoint>& v, const AlgebraicPoint& p) {
        for (const auto& q : v)
            if (same_point(p, q)) return true;
        return false;
    };

    BiPoly f = F.affine();
    BiPoly fy = f.dy();
    hard_assert(!fy.is_zero(), "irreducible cubic depends on y");
    if (fy.total_degree() > 0) {  // constant fy means no vertical tangencies
        for (auto& s : solve_system2(f, fy)) {
            AlgebraicPoint p;
            p.x = s.x;
            p.y = s.y;
            if (!contains(E.e_sing, p)) E.e_vt.push_back(p);
        }
    }

    TriPoly H = hessian(F);
    hard_assert(!H.is_zero(), "irreducible cubic has a nonzero Hessian");
    BiPoly h = H.dehom_z();
    for (auto& s : solve_system2(f, h)) {
        AlgebraicPoint p;
        p.x = s.x;
        p.y = s.y;
        if (!contains(E.e_sing, p)) E.e_fl.push_back(p);
    }

    hard_assert(E.e_sing.size() <= 1, "|e_sing| <= 1");
    hard_assert(E.e_inf.size() <= 3, "|e_inf| <= 3");
    hard_assert(E.e_vt.size() <= 6, "|e_vt| <= 6");
    hard_assert(E.e_fl.size() <= 3, "|e_fl| <= 3");
    return E;
}

}  // namespace vis
