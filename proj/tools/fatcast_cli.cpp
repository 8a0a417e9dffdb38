#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fatcast/fatcast.hpp"
#include "fatcast/json_io.hpp"

namespace {

constexpr int kExitWitness = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitUsage = 64;

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fatcast::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest_of(const std::string& bytes) {
    std::ostringstream ss;
    ss << "fnv1a:" << std::hex << std::setfill('0') << std::setw(16) << fnv1a(bytes);
    return ss.str();
}

struct Output {
    bool compact = false;
    void emit(const fatcast::json& j) const {
        if (compact) std::cout << j.dump() << '\n';
        else std::cout << j.dump(2) << '\n';
    }
};

fatcast::json run_report(const std::string& command, const std::string& digest,
                         fatcast::json config, fatcast::json results, double runtime_ms) {
    return {{"schema_version", 1},
            {"tool_version", fatcast::kVersion},
            {"command", command},
            {"input_digest", digest},
            {"config", std::move(config)},
            {"runtime_ms", runtime_ms},
            {"results", std::move(results)}};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

fatcast::Point3 parse_center(const std::string& text) {
    std::istringstream ss(text);
    double x, y, z;
    char c1, c2;
    if (ss >> x >> c1 >> y >> c2 >> z && c1 == ',' && c2 == ',' && ss.eof()) {
        return {x, y, z};
    }
    throw fatcast::ParseError("center must be 'auto' or 'x,y,z'");
}

int cmd_analyze(const std::string& file, const std::string& center, const Output& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string bytes = read_file(file);
    std::istringstream in(bytes);
    const fatcast::ConvexPolyhedron poly = fatcast::read_off(in);

    fatcast::FatnessReport fat;
    if (center == "auto") {
        fat = fatcast::best_center(poly);
    } else {
        fat = fatcast::annulus_at(poly, parse_center(center));
    }
    const auto verdicts = fatcast::castable_faces(poly);
    const auto lemma1 = fatcast::check_lemma1(poly, fat);
    const auto gp = fatcast::validate_general_position(poly);

    int weak = 0, strong = 0;
    fatcast::json lemma2 = fatcast::json::array();
    bool lemma2_all = true;
    for (const auto& v : verdicts) {
        weak += v.castable_weak;
        strong += v.castable_strong;
        if (v.castable_weak) {
            const bool ok = fatcast::check_lemma2(poly, v.facet);
            lemma2_all &= ok;
            lemma2.push_back({{"facet", v.facet}, {"ok", ok}});
        }
    }

    fatcast::json results{
        {"vertices", poly.vertex_count()},
        {"facets", poly.facet_count()},
        {"edges", poly.edge_count()},
        {"volume", poly.volume()},
        {"fatness", fatcast::to_json(fat)},
        {"general_position", fatcast::to_json(gp)},
        {"castable_weak_count", weak},
        {"castable_strong_count", strong},
        {"verdicts", fatcast::to_json(verdicts)},
        {"lemma1",
         {{"all_ok", lemma1.all_ok()},
          {"edges_ok", lemma1.edges_ok},
          {"faces_ok", lemma1.faces_ok},
          {"volume_lo_ok", lemma1.volume_lo_ok},
          {"volume_hi_ok", lemma1.volume_hi_ok},
          {"diameter_ok", lemma1.diameter_ok},
          {"max_edge", lemma1.max_edge},
          {"edge_bound", lemma1.bounds.l_star},
          {"max_area", lemma1.max_area},
          {"area_bound", lemma1.bounds.s_star}}},
        {"lemma2", {{"all_ok", lemma2_all}, {"per_facet", lemma2}}}};

    out.emit(run_report("analyze", digest_of(bytes),
                        {{"file", file}, {"center", center}}, results, ms_since(t0)));
    return kExitWitness;
}

int cmd_cut_search(const std::string& file, int budget, uint64_t seed,
                   const std::string& strategy_name, int offsets, const Output& out) {
    const auto t0 = std::chrono::steady_clock::now();
    fatcast::CutStrategy strategy;
    if (strategy_name == "mixed") strategy = fatcast::CutStrategy::Mixed;
    else if (strategy_name == "vertex-triple") strategy = fatcast::CutStrategy::VertexTriple;
    else if (strategy_name == "facet-parallel") strategy = fatcast::CutStrategy::FacetParallel;
    else if (strategy_name == "random") strategy = fatcast::CutStrategy::Random;
    else {
        std::cerr << "unknown strategy '" << strategy_name << "'\n";
        return kExitUsage;
    }

    const std::string bytes = read_file(file);
    std::istringstream in(bytes);
    const fatcast::ConvexPolyhedron poly = fatcast::read_off(in);

    const fatcast::SearchResult res =
        fatcast::search_two_castable(poly, budget, seed, strategy, 1e-7, offsets);

    fatcast::json results = fatcast::to_json(res, file);
    out.emit(run_report("cut-search", digest_of(bytes),
                        {{"file", file},
                         {"budget", budget},
                         {"seed", seed},
                         {"strategies", strategy_name},
                         {"offsets", offsets}},
                        results, ms_since(t0)));
    return res.witness ? kExitWitness : kExitNegative;
}

int cmd_bounds(bool as_json, const Output& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto bounds = fatcast::all_bounds();
    if (as_json || out.compact) {
        fatcast::json rows = fatcast::json::array();
        for (const auto& b : bounds) rows.push_back(fatcast::to_json(b));
        out.emit(run_report("bounds", "none", fatcast::json::object(),
                            {{"bounds", rows}}, ms_since(t0)));
        return kExitWitness;
    }
    std::cout << std::left << std::setw(24) << "case" << std::setw(68) << "relation"
              << std::setw(16) << "root" << std::setw(13) << "residual"
              << "matches_reference\n";
    for (const auto& b : bounds) {
        std::string name = fatcast::case_name(b.id);
        if (b.id == fatcast::CaseId::IIbNeg) {
            name += std::string(" (") + fatcast::variant_name(b.variant) + ")";
        }
        std::cout << std::left << std::setw(24) << name << std::setw(68) << b.relation
                  << std::setprecision(10) << std::fixed << std::setw(16) << b.root
                  << std::scientific << std::setprecision(2) << std::setw(13)
                  << b.trace.residual << (b.matches_reference ? "true" : "false") << "\n";
        std::cout.unsetf(std::ios::floatfield);
    }
    return kExitWitness;
}

int cmd_generate(int n, double ratio, const std::string& platonic, int prism_sides,
                 double height, uint64_t seed, int cap, double epsilon,
                 const std::string& out_path, const Output& out) {
    const auto t0 = std::chrono::steady_clock::now();
    fatcast::GenSpec spec;
    spec.seed = seed;
    spec.epsilon = epsilon;

    fatcast::ConvexPolyhedron poly;
    std::optional<fatcast::FatnessReport> report;
    try {
        if (n > 0) {
            spec.kind = fatcast::GenKind::SphereHull;
            spec.n = n;
            auto r = fatcast::gen_sphere_hull(n, seed);
            poly = std::move(r.poly);
            report = r.report;
        } else if (ratio > 0) {
            spec.kind = fatcast::GenKind::SphereHull;
            spec.target_ratio = ratio;
            auto r = fatcast::gen_with_target_ratio(ratio, seed, cap,
                                                    epsilon > 0 ? epsilon : 1e-5);
            poly = std::move(r.poly);
            report = r.report;
        } else if (!platonic.empty()) {
            spec.kind = fatcast::GenKind::Platonic;
            spec.name = platonic;
            using P = fatcast::Platonic;
            if (platonic == "tetrahedron") poly = fatcast::make_platonic(P::Tetrahedron);
            else if (platonic == "cube") poly = fatcast::make_platonic(P::Cube);
            else if (platonic == "octahedron") poly = fatcast::make_platonic(P::Octahedron);
            else if (platonic == "dodecahedron") poly = fatcast::make_platonic(P::Dodecahedron);
            else if (platonic == "icosahedron") poly = fatcast::make_platonic(P::Icosahedron);
            else {
                std::cerr << "unknown platonic solid '" << platonic << "'\n";
                return kExitUsage;
            }
        } else if (prism_sides > 0) {
            spec.kind = fatcast::GenKind::Prism;
            spec.n = prism_sides;
            poly = fatcast::make_prism(prism_sides, height);
        } else {
            std::cerr << "one of --n, --ratio, --platonic, --prism is required\n";
            return kExitUsage;
        }

        if (epsilon > 0 && ratio <= 0) {
            spec.kind = fatcast::GenKind::Perturbed;
            poly = fatcast::perturb_general_position(poly, epsilon, seed);
        }
    } catch (const fatcast::CapExceeded& e) {
        std::cerr << e.what() << " (best ratio " << std::setprecision(12)
                  << e.best_ratio_achieved << ")\n";
        return kExitNegative;
    } catch (const fatcast::PerturbationFailed& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    }

    if (!report) {
        try {
            report = fatcast::best_center(poly);
        } catch (const fatcast::Error&) {
        }
    }
    const auto gp = fatcast::validate_general_position(poly);

    fatcast::write_off_file(out_path, poly);
    fatcast::json manifest{{"spec", fatcast::to_json(spec)},
                           {"seed", seed},
                           {"achieved_ratio", report ? fatcast::json(report->ratio)
                                                     : fatcast::json(nullptr)},
                           {"general_position_margins", fatcast::to_json(gp)}};
    {
        std::ofstream mf(out_path + ".manifest.json");
        if (!mf) throw fatcast::ParseError("cannot write manifest for '" + out_path + "'");
        mf << manifest.dump(2) << '\n';
    }

    fatcast::json results{{"off", out_path},
                          {"manifest", out_path + ".manifest.json"},
                          {"vertices", poly.vertex_count()},
                          {"facets", poly.facet_count()},
                          {"achieved_ratio",
                           report ? fatcast::json(report->ratio) : fatcast::json(nullptr)},
                          {"general_position", fatcast::to_json(gp)}};
    out.emit(run_report("generate", "none", fatcast::to_json(spec), results, ms_since(t0)));
    return kExitWitness;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex-polyhedron castability and fatness analyzer"};
    app.require_subcommand(1);
    Output out;
    bool strict = false;
    app.add_flag("--compact", out.compact, "single-line JSON output");
    app.add_flag("--strict", strict, "randomized commands must pass --seed explicitly");

    std::string file, center = "auto";
    auto* analyze = app.add_subcommand("analyze", "fatness, castability and bound checks");
    analyze->fallthrough();
    analyze->add_option("file", file, "input OFF file")->required();
    analyze->add_option("--center", center, "annulus center: auto or x,y,z");

    int budget = 2000, offsets = 7;
    uint64_t seed = 0;
    bool seed_given = false;
    std::string strategy = "mixed";
    auto* search = app.add_subcommand("cut-search", "look for a two-castable plane cut");
    search->fallthrough();
    search->add_option("file", file, "input OFF file")->required();
    search->add_option("--budget", budget, "candidate plane budget");
    search->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });
    search->add_option("--strategies", strategy,
                       "mixed | vertex-triple | facet-parallel | random");
    search->add_option("--offsets", offsets, "offsets per facet-parallel direction");

    bool bounds_json = false;
    auto* bounds = app.add_subcommand("bounds", "reproduce the case-analysis constants");
    bounds->fallthrough();
    bounds->add_flag("--json", bounds_json, "emit JSON instead of the table");

    int gen_n = 0, prism_sides = 0, cap = 800;
    double gen_ratio = 0.0, epsilon = 0.0, height = 1.0;
    std::string platonic, out_path;
    auto* generate = app.add_subcommand("generate", "write a test polyhedron as OFF + manifest");
    generate->fallthrough();
    generate->add_option("--n", gen_n, "sphere-hull point count");
    generate->add_option("--ratio", gen_ratio, "target fatness ratio");
    generate->add_option("--platonic", platonic,
                         "tetrahedron|cube|octahedron|dodecahedron|icosahedron");
    generate->add_option("--prism", prism_sides, "regular prism side count");
    generate->add_option("--height", height, "prism height");
    generate->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });
    generate->add_option("--cap", cap, "vertex cap for --ratio");
    generate->add_option("--epsilon", epsilon, "general-position perturbation magnitude");
    generate->add_option("-o,--output", out_path, "output OFF path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(file, center, out);
        if (search->parsed()) {
            if (budget < 1) {
                std::cerr << "--budget must be at least 1\n";
                return kExitUsage;
            }
            if (strict && !seed_given && strategy != "facet-parallel") {
                std::cerr << "--strict requires an explicit --seed for randomized commands\n";
                return kExitUsage;
            }
            return cmd_cut_search(file, budget, seed, strategy, offsets, out);
        }
        if (bounds->parsed()) return cmd_bounds(bounds_json, out);
        if (generate->parsed()) {
            const bool randomized = gen_n > 0 || gen_ratio > 0 || epsilon > 0;
            if (strict && !seed_given && randomized) {
                std::cerr << "--strict requires an explicit --seed for randomized commands\n";
                return kExitUsage;
            }
            if (gen_ratio > 0 && cap < 4) {
                std::cerr << "--cap must be at least 4\n";
                return kExitUsage;
            }
            return cmd_generate(gen_n, gen_ratio, platonic, prism_sides, height, seed, cap,
                                epsilon, out_path, out);
        }
    } catch (const fatcast::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fatcast::InvalidPolyhedron& e) {
        std::cerr << "invalid polyhedron: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const fatcast::DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const fatcast::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeometry;
    }
    return kExitUsage;
}
