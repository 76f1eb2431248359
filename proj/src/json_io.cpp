#include "vis/json_io.hpp"

#include <fstream>

namespace vis {

static const char* kCoeffKeys[10] = {"X3", "X2Y", "X2Z", "XY2", "XYZ",
                                     "XZ2", "Y3", "Y2Z", "YZ2", "Z3"};

Json point_set_to_json(const PointSet& A) {
    Json j;
    if (!A.label().empty()) j["label"] = A.label();
    j["points"] = Json::array();
    for (const auto& p : A.points())
        j["points"].push_back({{"x", to_string(p.x)}, {"y", to_string(p.y)}});
    return j;
}

PointSet point_set_from_json(const Json& j) {
    try {
        std::string label = j.value("label", "");
        std::vector<Point> pts;
        for (const auto& e : j.at("points"))
            pts.push_back({parse_rational(e.at("x").get<std::string>()),
                           parse_rational(e.at("y").get<std::string>())});
        return PointSet(std::move(pts), label);
    } catch (const DuplicatePoint&) {
        throw;
    } catch (const std::exception& e) {
        throw InputParseError(std::string("bad point set: ") + e.what());
    }
}

Json cubic_to_json(const HomogeneousCubic& F) {
    Json coeffs;
    const auto& order = HomogeneousCubic::coeff_order();
    for (int c = 0; c < 10; ++c) {
        auto [i, jdeg, k] = order[c];
        coeffs[kCoeffKeys[c]] = to_string(F.coeff(i, jdeg, k));
    }
    return Json{{"coeffs", coeffs}};
}

HomogeneousCubic cubic_from_json(const Json& j) {
    try {
        const Json& coeffs = j.at("coeffs");
        std::array<Rational, 10> c;
        for (int i = 0; i < 10; ++i)
            c[i] = parse_rational(coeffs.at(kCoeffKeys[i]).get<std::string>());
        return HomogeneousCubic::from_coeffs(c);
    } catch (const NotACubic&) {
        throw;
    } catch (const std::exception& e) {
        throw InputParseError(std::string("bad cubic: ") + e.what());
    }
}

Json alg_real_to_json(const AlgReal& a) {
    if (a.is_rational()) return to_string(a.rational_value());
    Json poly = Json::array();
    for (int i = 0; i <= a.root().poly.degree(); ++i)
        poly.push_back(to_string(a.root().poly[i]));
    return Json{{"root", {{"poly", poly},
                          {"lo", to_string(a.root().lo)},
                          {"hi", to_string(a.root().hi)}}}};
}

Json cover_to_json(const CliqueCover& c) {
    return Json{{"scope", c.scope},
                {"parts", c.parts},
                {"certified", c.certified},
                {"b", c.b}};
}

Json patch_report_to_json(const PatchDecomposition& D) {
    Json cuts = Json::array();
    for (const auto& c : D.cut_xs) cuts.push_back(alg_real_to_json(c));
    Json probes = Json::array();
    for (const auto& q : D.probes) probes.push_back(to_string(q));
    Json patches = Json::array();
    for (const auto& p : D.patches) {
        Json cells = Json::array();
        for (auto& [j, r] : p.cells) cells.push_back({{"interval", j}, {"rank", r}});
        patches.push_back({{"cells", cells}, {"convexity", p.convexity}});
    }
    return Json{{"cuts", cuts},
                {"probes", probes},
                {"branch_counts", D.branch_counts},
                {"patch_count", D.patches.size()},
                {"patches", patches},
                {"exceptional", {{"e_sing", D.E.e_sing.size()},
                                 {"e_inf", D.E.e_inf.size()},
                                 {"e_vt", D.E.e_vt.size()},
                                 {"e_fl", D.E.e_fl.size()},
                                 {"total", D.E.total()}}}};
}

static const char* tag_name(CubicTag t) {
    switch (t) {
        case CubicTag::Irreducible: return "irreducible";
        case CubicTag::LineConic: return "line+conic";
        case CubicTag::ThreeLines: return "three-lines";
        default: return "unclassified";
    }
}

Json container_report_to_json(const ContainerReport& r) {
    Json certs = Json::array();
    for (const auto& c : r.certificates) certs.push_back({{"name", c.name}, {"pass", c.pass}});
    return Json{{"tag", tag_name(r.tag)},
                {"n", r.n},
                {"s", r.s},
                {"m", r.m},
                {"a", r.a},
                {"cover", cover_to_json(r.cover)},
                {"cover_bound_claimed", r.cover_bound_claimed},
                {"omega_lower_bound", to_string(r.omega_lower_bound)},
                {"realized_clique", r.realized_clique},
                {"certificates", certs},
                {"success", r.success}};
}

Json turan_report_to_json(const TuranReport& r) {
    return Json{{"n", r.n},
                {"t2", r.t2},
                {"t3", r.t3},
                {"e", r.e},
                {"identities_checked", r.identities_checked},
                {"clique_below_four", r.clique_below_four},
                {"ordinary_bound_checked", r.ordinary_bound_checked}};
}

Json orchard_core_to_json(const OrchardCore& c) {
    return Json{{"survivors", c.survivors},
                {"n", c.n},
                {"delta", to_string(c.delta)},
                {"Dk", c.Dk},
                {"rich_counts", c.rich_counts},
                {"final_degrees", c.final_degrees}};
}

Json orchard_verification_to_json(const OrchardVerification& v) {
    const char* status = v.status == OrchardStatus::Applicable      ? "applicable"
                         : v.status == OrchardStatus::NotApplicable ? "not-applicable"
                                                                    : "violated";
    return Json{{"status", status},
                {"max_collinear", v.max_collinear_measured},
                {"clique", v.clique_measured},
                {"size_ok", v.size_ok},
                {"incidence_ok", v.incidence_ok},
                {"size_bound", to_string(v.size_bound)},
                {"incidence_bound", to_string(v.incidence_bound)}};
}

Json ambient_report_to_json(const AmbientReport& r) {
    return Json{{"n", r.n},
                {"patch_size", r.patch_size},
                {"ambient_blockers", r.ambient_blockers},
                {"size_ok", r.size_ok},
                {"blockers_ok", r.blockers_ok},
                {"clique_lower", to_string(r.clique_lower)}};
}

Json cubic_fit_to_json(const CubicFit& f) {
    Json j{{"found", f.F.has_value()},
           {"s", f.s},
           {"degenerate_samples", f.degenerate_samples},
           {"trials_used", f.trials_used}};
    if (f.F) j["cubic"] = cubic_to_json(*f.F);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw InputParseError(path + ": " + e.what());
    }
}

}  // namespace vis
