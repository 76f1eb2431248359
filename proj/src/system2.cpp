#include "vis/system2.hpp"

namespace vis {

RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

RatInterval iv_eval(const UniPoly& p, const RatInterval& x) {
    RatInterval acc{Rational(0), Rational(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = iv_mul(acc, x);
        acc = iv_add(acc, {p[i], p[i]});
    }
    return acc;
}

RatInterval iv_eval(const BiPoly& p, const RatInterval& x, const RatInterval& y) {
    RatInterval acc{Rational(0), Rational(0)};
    for (int j = p.degree_y(); j >= 0; --j) {
        acc = iv_mul(acc, y);
        acc = iv_add(acc, iv_eval(p.coeff_y(j), x));
    }
    return acc;
}

bool poly_vanishes_at(const UniPoly& q, const AlgReal& a) {
    if (q.is_zero()) return true;
    if (a.is_rational()) return q.sign_at(a.rational_value()) == 0;
    UniPoly g = UniPoly::gcd(a.root().poly, q);
    if (g.degree() <= 0) return false;
    auto seq = sturm_sequence(g);
    return sturm_count(seq, a.root().lo, a.root().hi) == 1;
}

std::vector<SystemSolution> solve_system2(const BiPoly& f, const BiPoly& g,
                                          const std::vector<BiPoly>& filters, int max_depth) {
    if (f.is_zero() || g.is_zero())
        throw CertificationFailure("solve_system2: zero equation");
    UniPoly rx_poly = resultant_y(f, g);
    if (rx_poly.is_zero())
        throw CertificationFailure("solve_system2: equations share a component");
    std::vector<SystemSolution> out;
    if (rx_poly.degree() <= 0) return out;

    std::vector<AlgReal> xs;
    for (auto& r : sturm_isolate(rx_poly)) xs.emplace_back(r);

    std::optional<std::vector<AlgReal>> ys_cache;
    auto y_candidates = [&]() -> const std::vector<AlgReal>& {
        if (!ys_cache) {
            UniPoly ry_poly = resultant_x(f, g);
            if (ry_poly.is_zero())
                throw CertificationFailure("solve_system2: equations share a component");
            ys_cache.emplace();
            if (ry_poly.degree() > 0)
                for (auto& r : sturm_isolate(ry_poly)) ys_cache->emplace_back(r);
        }
        return *ys_cache;
    };

    for (auto& ax : xs) {
        if (ax.is_rational()) {
            const Rational& x0 = ax.rational_value();
            UniPoly fx = f.eval_x(x0), gx = g.eval_x(x0);
            if (fx.is_zero() && gx.is_zero())
                throw CertificationFailure("solve_system2: vertical line component");
            UniPoly h = fx.is_zero() ? gx : gx.is_zero() ? fx : UniPoly::gcd(fx, gx);
            if (h.degree() <= 0) continue;  // degeneration at infinity, no finite y
            for (auto& ry : sturm_isolate(h)) {
                AlgReal ay(ry);
                bool ok = true;
                for (const auto& e : filters)
                    if (!poly_vanishes_at(e.eval_x(x0), ay)) {
                        ok = false;
                        break;
                    }
                if (ok) out.push_back({ax, ay});
            }
        } else {
            for (const AlgReal& ay0 : y_candidates()) {
                AlgReal axc = ax, ayc = ay0;
                std::vector<const BiPoly*> eqs{&f, &g};
                for (const auto& e : filters) eqs.push_back(&e);
                bool rejected = false;
                for (int depth = 0; depth <= max_depth && !rejected; ++depth) {
                    RatInterval ix{axc.lower(), axc.upper()}, iy{ayc.lower(), ayc.upper()};
                    for (const BiPoly* e : eqs)
                        if (!iv_eval(*e, ix, iy).contains_zero()) {
                            rejected = true;
                            break;
                        }
                    if (rejected || depth == max_depth) break;
                    axc.tighten((axc.upper() - axc.lower()) / 2);
                    ayc.tighten((ayc.upper() - ayc.lower()) / 2);
                }
                if (!rejected) out.push_back({ax, ay0});
            }
        }
    }
    return out;
}

}  // namespace vis
