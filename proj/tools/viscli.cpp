#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "vis/generators.hpp"
#include "vis/json_io.hpp"

using namespace vis;

namespace {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& w) : std::runtime_error(w) {}
};

struct RunResult {
    Json results;
    std::vector<Certificate> certificates;
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

PointSet load_points(const Json& cfg) {
    return point_set_from_json(load_json_file(cfg.at("in").get<std::string>()));
}

HomogeneousCubic load_cubic(const Json& cfg) {
    return cubic_from_json(load_json_file(cfg.at("cubic").get<std::string>()));
}

RunResult run_generate(const Json& cfg) {
    std::string kind = cfg.at("kind").get<std::string>();
    PointSet A;
    if (kind == "one-blocker")
        A = gen_one_blocker(cfg.at("m").get<int>());
    else if (kind == "cubic-power")
        A = gen_cubic_power(cfg.at("m").get<int>());
    else if (kind == "elliptic")
        A = gen_elliptic_coset(parse_rational(cfg.at("a").get<std::string>()),
                               parse_rational(cfg.at("b").get<std::string>()),
                               {parse_rational(cfg.at("px").get<std::string>()),
                                parse_rational(cfg.at("py").get<std::string>())},
                               cfg.at("n").get<int>());
    else if (kind == "random")
        A = gen_random_general(cfg.at("n").get<int>(), cfg.at("range").get<long>(),
                               cfg.at("seed").get<uint64_t>());
    else if (kind == "grid")
        A = gen_grid(cfg.at("w").get<int>(), cfg.at("h").get<int>());
    else
        throw UsageError("unknown generator kind: " + kind);
    return {point_set_to_json(A), {}};
}

RunResult run_analyze(const Json& cfg) {
    PointSet A = point_set_from_json(load_json_file(cfg.at("in").get<std::string>()));
    auto G = visibility_graph(A);
    auto Gs = visibility_graph_serial(A);
    bool adjacency_ok = G.size() == Gs.size() && G.witnesses() == Gs.witnesses();
    for (int i = 0; adjacency_ok && i < G.size(); ++i)
        for (int j = 0; j < G.size(); ++j)
            if (G.adjacent(i, j) != Gs.adjacent(i, j)) adjacency_ok = false;

    Json results{{"n", A.size()}, {"edges", G.edge_count()}};
    if (A.size() >= 2) {
        auto stats = enumerate_lines(A);
        results["max_collinear"] = max_collinear(A);
        results["t2"] = stats.t2;
        Json hist;
        for (auto& [size, count] : stats.histogram) hist[std::to_string(size)] = count;
        results["line_histogram"] = hist;
    }
    std::vector<Certificate> certs{{"adjacency-recomputation", adjacency_ok}};
    if (A.size() <= 18) {
        auto exact = max_visible_clique(G, 100000000);
        bool brute_ok =
            exact.optimal && exact.clique.size() == brute_force_max_clique(G).size();
        results["max_clique"] = exact.clique.size();
        certs.push_back({"clique-brute-oracle", brute_ok});
    }
    return {results, certs};
}

RunResult run_classify(const Json& cfg) {
    auto F = load_cubic(cfg);
    auto cls = classify(F);
    Json results;
    switch (cls.tag) {
        case CubicTag::Irreducible: results["tag"] = "irreducible"; break;
        case CubicTag::LineConic: results["tag"] = "line+conic"; break;
        case CubicTag::ThreeLines: results["tag"] = "three-lines"; break;
        case CubicTag::Unclassified:
            results["tag"] = "unclassified";
            results["reason"] = cls.reason;
            break;
    }
    Json lines = Json::array();
    for (const auto& l : cls.lines) lines.push_back(l.str());
    if (!cls.lines.empty()) results["lines"] = lines;
    if (cls.tag == CubicTag::LineConic) results["conic"] = cls.conic.str();
    results["hessian"] = hessian(F).str();
    return {results, {}};
}

RunResult run_patches(const Json& cfg) {
    auto F = load_cubic(cfg);
    std::string chart = cfg.value("chart", "standard");
    Json results;
    PatchDecomposition D;
    if (chart == "sheared") {
        auto sh = shear_to_generic(F);
        D = decompose(sh.sheared, exceptional_set(sh.sheared, Chart::Sheared));
        results["lambda"] = to_string(sh.lambda);
    } else if (chart == "standard") {
        D = decompose(F, exceptional_set(F, Chart::Standard));
    } else {
        throw UsageError("chart must be standard or sheared");
    }
    results.update(patch_report_to_json(D));
    std::vector<Certificate> certs{
        {"exceptional-size-bound", D.E.total() <= 13},
        {"patch-count-bound", chart != "sheared" || D.patches.size() <= 15}};
    return {results, certs};
}

RunResult run_container(const Json& cfg) {
    PointSet A = load_points(cfg);
    auto F = load_cubic(cfg);
    auto rep = cubic_container(A, F, cfg.at("k").get<int>(),
                               cfg.value("budget", 20000000LL));
    return {container_report_to_json(rep), rep.certificates};
}

RunResult run_turan(const Json& cfg) {
    auto rep = turan_identities(load_points(cfg), cfg.value("budget", 20000000LL));
    std::vector<Certificate> certs{{"identities", rep.identities_checked}};
    if (rep.clique_below_four)
        certs.push_back({"ordinary-line-bound", rep.ordinary_bound_checked});
    return {turan_report_to_json(rep), certs};
}

RunResult run_orchard(const Json& cfg) {
    PointSet A = load_points(cfg);
    int k = cfg.value("k", 4), l = cfg.value("l", 4);
    auto core = orchard_core(A, k, l);
    auto v = verify_orchard_guarantees(core, A, k, l, cfg.value("budget", 20000000LL));
    Json results{{"core", orchard_core_to_json(core)},
                 {"verification", orchard_verification_to_json(v)}};
    return {results, {{"not-violated", v.status != OrchardStatus::Violated}}};
}

RunResult run_fit_cubic(const Json& cfg) {
    auto fit = fit_cubic(load_points(cfg), cfg.value("trials", 200),
                         cfg.value("seed", uint64_t{0}));
    return {cubic_fit_to_json(fit), {{"cubic-found", fit.F.has_value()}}};
}

RunResult run_ambient(const Json& cfg) {
    auto rep = ambient_container_check(load_points(cfg), load_cubic(cfg),
                                       cfg.at("patch").get<int>(),
                                       parse_rational(cfg.at("alpha").get<std::string>()),
                                       parse_rational(cfg.at("beta").get<std::string>()));
    return {ambient_report_to_json(rep),
            {{"size", rep.size_ok}, {"blockers", rep.blockers_ok}}};
}

RunResult dispatch(const Json& cfg);

RunResult run_verify_all(const Json& cfg) {
    namespace fs = std::filesystem;
    std::string suite = cfg.at("suite").get<std::string>();
    if (!fs::is_directory(suite)) throw UsageError("suite is not a directory: " + suite);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(suite))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) std::cerr << "warning: empty suite " << suite << "\n";

    Json instances = Json::array();
    std::vector<Certificate> certs;
    for (const auto& f : files) {
        Json instance = load_json_file(f.string());
        RunResult r;
        try {
            r = dispatch(instance);
        } catch (const InputParseError& e) {
            throw InputParseError(f.string() + ": " + e.what());
        } catch (const UsageError& e) {
            throw UsageError(f.string() + ": " + e.what());
        } catch (const std::exception& e) {
            r.results = Json{{"error", e.what()}};
            r.certificates.push_back({"completed", false});
        }
        Json entry{{"file", f.filename().string()}, {"results", r.results}};
        Json cj = Json::array();
        for (const auto& c : r.certificates) {
            cj.push_back({{"name", c.name}, {"pass", c.pass}});
            certs.push_back({f.filename().string() + ":" + c.name, c.pass});
        }
        entry["certificates"] = cj;
        instances.push_back(entry);
    }
    return {Json{{"instances", instances}}, certs};
}

RunResult dispatch(const Json& cfg) {
    std::string cmd = cfg.at("command").get<std::string>();
    if (cmd == "generate") return run_generate(cfg);
    if (cmd == "analyze") return run_analyze(cfg);
    if (cmd == "classify-cubic") return run_classify(cfg);
    if (cmd == "patches") return run_patches(cfg);
    if (cmd == "container") return run_container(cfg);
    if (cmd == "turan") return run_turan(cfg);
    if (cmd == "orchard") return run_orchard(cfg);
    if (cmd == "fit-cubic") return run_fit_cubic(cfg);
    if (cmd == "ambient-check") return run_ambient(cfg);
    if (cmd == "verify-all") return run_verify_all(cfg);
    throw UsageError("unknown command: " + cmd);
}

int run_and_report(Json cfg, const std::string& out_path) {
    std::string command = cfg.at("command").get<std::string>();
    Json report;
    report["command"] = command;
    report["config"] = cfg;
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a(cfg.dump())));
    report["config_hash"] = hash;
    if (cfg.contains("seed")) report["seed"] = cfg["seed"];

    int exit_code = 0;
    try {
        RunResult r = dispatch(cfg);
        report["results"] = r.results;
        Json certs = Json::array();
        bool all_pass = true;
        for (const auto& c : r.certificates) {
            certs.push_back({{"name", c.name}, {"pass", c.pass}});
            all_pass = all_pass && c.pass;
        }
        report["certificates"] = certs;
        report["pass"] = all_pass;
        exit_code = all_pass ? 0 : 1;
    } catch (const InputParseError& e) {
        report["error"] = e.what();
        report["pass"] = false;
        std::cerr << "error: " << e.what() << "\n";
        exit_code = 2;
    } catch (const UsageError& e) {
        report["error"] = e.what();
        report["pass"] = false;
        std::cerr << "error: " << e.what() << "\n";
        exit_code = 2;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        report["pass"] = false;
        std::cerr << "error: " << e.what() << "\n";
        exit_code = 1;
    }

    // generate's artifact is the point set itself, consumable via --in.
    std::string payload = (command == "generate" && exit_code == 0)
                              ? report["results"].dump(2) + "\n"
                              : report.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        out << payload;
    }
    std::cerr << command << ": " << (exit_code == 0 ? "certified" : "FAILED") << " (exit "
              << exit_code << ")\n";
    return exit_code;
}

// Merge order: file config, then explicitly passed flags on top.
void set_if(Json& cfg, const CLI::Option* opt, const std::string& key, const Json& value) {
    if (opt->count() > 0 || !cfg.contains(key)) cfg[key] = value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact visibility and cubic-container certification toolkit"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "report path (default stdout)");

    Json cfg;
    std::string config_path, in, cubic, chart = "standard", kind, suite, a = "0", b = "0",
                             px = "0", py = "0", alpha = "1/4", beta = "1/4";
    int m = 4, n = 10, w = 3, h = 3, k = 4, l = 4, patch = 0, trials = 200;
    long range = 1000;
    long long budget = 20000000;
    uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();  // lets --out after the subcommand reach the app
        sub->add_option("--config", config_path, "JSON config; flags override");
        return sub;
    };

    auto* g = add_common(app.add_subcommand("generate", "emit a point set"));
    auto* g_kind = g->add_option("--kind", kind)->required(false);
    auto* g_m = g->add_option("--m", m);
    auto* g_n = g->add_option("--n", n);
    auto* g_range = g->add_option("--range", range);
    auto* g_seed = g->add_option("--seed", seed);
    auto* g_w = g->add_option("--width", w);
    auto* g_h = g->add_option("--height", h);
    auto* g_a = g->add_option("--a", a);
    auto* g_b = g->add_option("--b", b);
    auto* g_px = g->add_option("--px", px);
    auto* g_py = g->add_option("--py", py);

    auto* an = add_common(app.add_subcommand("analyze", "point-set statistics"));
    auto* an_in = an->add_option("--in", in);

    auto* cc = add_common(app.add_subcommand("classify-cubic", "classify a cubic form"));
    auto* cc_cubic = cc->add_option("--cubic", cubic);

    auto* pa = add_common(app.add_subcommand("patches", "patch decomposition"));
    auto* pa_cubic = pa->add_option("--cubic", cubic);
    auto* pa_chart = pa->add_option("--chart", chart);

    auto* co = add_common(app.add_subcommand("container", "cubic-container pipeline"));
    auto* co_in = co->add_option("--in", in);
    auto* co_cubic = co->add_option("--cubic", cubic);
    auto* co_k = co->add_option("--k", k);
    auto* co_budget = co->add_option("--budget", budget);

    auto* tu = add_common(app.add_subcommand("turan", "ordinary-line identities"));
    auto* tu_in = tu->add_option("--in", in);
    auto* tu_budget = tu->add_option("--budget", budget);

    auto* orc = add_common(app.add_subcommand("orchard", "dense-orchard core"));
    auto* orc_in = orc->add_option("--in", in);
    auto* orc_k = orc->add_option("--k", k);
    auto* orc_l = orc->add_option("--l", l);
    auto* orc_budget = orc->add_option("--budget", budget);

    auto* fc = add_common(app.add_subcommand("fit-cubic", "container-curve search"));
    auto* fc_in = fc->add_option("--in", in);
    auto* fc_trials = fc->add_option("--trials", trials);
    auto* fc_seed = fc->add_option("--seed", seed);

    auto* am = add_common(app.add_subcommand("ambient-check", "ambient-density checker"));
    auto* am_in = am->add_option("--in", in);
    auto* am_cubic = am->add_option("--cubic", cubic);
    auto* am_patch = am->add_option("--patch", patch);
    auto* am_alpha = am->add_option("--alpha", alpha);
    auto* am_beta = am->add_option("--beta", beta);

    auto* va = add_common(app.add_subcommand("verify-all", "run a suite directory"));
    auto* va_suite = va->add_option("--suite", suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) cfg = load_json_file(config_path);

        CLI::App* sub = app.get_subcommands().front();
        const std::string& name = sub->get_name();
        cfg["command"] = name;
        if (sub == g) {
            set_if(cfg, g_kind, "kind", kind);
            set_if(cfg, g_m, "m", m);
            set_if(cfg, g_n, "n", n);
            set_if(cfg, g_range, "range", range);
            set_if(cfg, g_seed, "seed", seed);
            set_if(cfg, g_w, "w", w);
            set_if(cfg, g_h, "h", h);
            set_if(cfg, g_a, "a", a);
            set_if(cfg, g_b, "b", b);
            set_if(cfg, g_px, "px", px);
            set_if(cfg, g_py, "py", py);
        } else if (sub == an) {
            set_if(cfg, an_in, "in", in);
        } else if (sub == cc) {
            set_if(cfg, cc_cubic, "cubic", cubic);
        } else if (sub == pa) {
            set_if(cfg, pa_cubic, "cubic", cubic);
            set_if(cfg, pa_chart, "chart", chart);
        } else if (sub == co) {
            set_if(cfg, co_in, "in", in);
            set_if(cfg, co_cubic, "cubic", cubic);
            set_if(cfg, co_k, "k", k);
            set_if(cfg, co_budget, "budget", budget);
        } else if (sub == tu) {
            set_if(cfg, tu_in, "in", in);
            set_if(cfg, tu_budget, "budget", budget);
        } else if (sub == orc) {
            set_if(cfg, orc_in, "in", in);
            set_if(cfg, orc_k, "k", k);
            set_if(cfg, orc_l, "l", l);
            set_if(cfg, orc_budget, "budget", budget);
        } else if (sub == fc) {
            set_if(cfg, fc_in, "in", in);
            set_if(cfg, fc_trials, "trials", trials);
            set_if(cfg, fc_seed, "seed", seed);
        } else if (sub == am) {
            set_if(cfg, am_in, "in", in);
            set_if(cfg, am_cubic, "cubic", cubic);
            set_if(cfg, am_patch, "patch", patch);
            set_if(cfg, am_alpha, "alpha", alpha);
            set_if(cfg, am_beta, "beta", beta);
        } else if (sub == va) {
            set_if(cfg, va_suite, "suite", suite);
        }
        return run_and_report(std::move(cfg), out_path);
    } catch (const InputParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
