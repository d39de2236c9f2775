// quadgraph: build and verify orthogonality graphs over finite quadratic spaces.
//
// Exit codes: 0 success / all claims pass, 1 claim failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "quadgraph/json_io.hpp"
#include "quadgraph/verify.hpp"

using namespace quadgraph;

namespace {

struct GlobalConfig {
    int n = 0, k = 0;
    std::string q;        // cardinality ("9") or "p^e" ("3^2")
    std::string modulus;  // comma-separated coefficients, constant term first
    std::string cache_dir;
    std::string loops = "include";
    size_t eig_cap = 5000;
    std::uint64_t clique_budget = 50'000'000;
    std::uint64_t seed = 12345;
    int trials = 200;
    size_t arc_cap = 20000;
    unsigned threads = 0;
    int q_cap = FieldSpec::kDefaultMaxOrder;
    std::string graph = "square";
    std::string format;
    std::string output;
};

std::vector<int> parse_modulus(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

FieldRef make_field(const GlobalConfig& cfg) {
    std::vector<int> mod;
    if (!cfg.modulus.empty()) mod = parse_modulus(cfg.modulus);
    return FieldSpec::from_order(cfg.q, mod, cfg.q_cap);
}

std::optional<std::filesystem::path> cache_dir_of(const GlobalConfig& cfg) {
    if (!cfg.cache_dir.empty()) return std::filesystem::path(cfg.cache_dir);
    if (const char* env = std::getenv("QUADGRAPH_CACHE"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

BuildOptions build_options(const GlobalConfig& cfg) {
    BuildOptions opt;
    opt.loop_policy = cfg.loops == "exclude" ? LoopPolicy::Exclude : LoopPolicy::Include;
    opt.threads = cfg.threads;
    opt.cache_dir = cache_dir_of(cfg);
    return opt;
}

OrthGraph build_graph(const GlobalConfig& cfg, const FieldRef& spec) {
    if (cfg.graph == "bar") return build_gamma_bar(cfg.n, cfg.k, spec, build_options(cfg));
    return build_gamma_square(cfg.n, cfg.k, spec, build_options(cfg));
}

void write_text(const GlobalConfig& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw Error("cannot open output file " + cfg.output);
    out << text;
}

void emit_graph(const GlobalConfig& cfg, const OrthGraph& g, const std::string& format) {
    if (format == "dot") {
        std::ostringstream os;
        write_dot(g, os);
        write_text(cfg, os.str());
    } else {
        // edgelist (default): edges to the output, vertex table to a sidecar
        // file (inline when writing to stdout)
        std::ostringstream edges;
        if (cfg.output.empty() || cfg.output == "-") {
            std::ostringstream both;
            write_edge_list(g, edges, &both);
            std::cout << "# vertex table: index, then k*n basis entries (element indices)\n";
            std::cout << both.str();
            std::cout << "# edges: u v\n";
            std::cout << edges.str();
        } else {
            std::ofstream ef(cfg.output);
            if (!ef) throw Error("cannot open output file " + cfg.output);
            std::ofstream vf(cfg.output + ".vertices");
            if (!vf) throw Error("cannot open output file " + cfg.output + ".vertices");
            write_edge_list(g, ef, &vf);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonality graphs of finite quadratic spaces: build, stats, spectra, and "
                 "claim verification"};
    app.require_subcommand(1);

    GlobalConfig cfg;
    app.add_option("--n", cfg.n, "ambient dimension")->required(false);
    app.add_option("--k", cfg.k, "subspace dimension");
    app.add_option("--q", cfg.q, "field order, an odd prime power (p^e)");
    app.add_option("--modulus", cfg.modulus,
                   "irreducible modulus for extension fields, comma-separated coefficients, "
                   "constant term first");
    app.add_option("--cache-dir", cfg.cache_dir,
                   "subspace enumeration cache directory (env QUADGRAPH_CACHE)");
    app.add_option("--loops", cfg.loops, "gamma-bar loop policy: include|exclude")
        ->check(CLI::IsMember({"include", "exclude"}));
    app.add_option("--eig-cap", cfg.eig_cap, "eigensolver vertex cap (default 5000)");
    app.add_option("--clique-budget", cfg.clique_budget, "clique search node budget");
    app.add_option("--seed", cfg.seed, "RNG seed for gap-test");
    app.add_option("--trials", cfg.trials, "gap-test trial count (default 200)");
    app.add_option("--arc-cap", cfg.arc_cap, "arc-transitivity orbit cap (default 20000)");
    app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    app.add_option("--q-cap", cfg.q_cap, "maximum supported field order (default 81)");
    app.add_option("--graph", cfg.graph, "square (dot_k vertices) or bar (all k-subspaces)")
        ->check(CLI::IsMember({"square", "bar"}));
    app.add_option("--format", cfg.format, "output format: edgelist|dot|json|csv");
    app.add_option("--output,-o", cfg.output, "output path (default stdout)");

    auto* cmd_build = app.add_subcommand("build", "build a graph and export it");
    auto* cmd_export = app.add_subcommand("export", "alias of build");
    auto* cmd_stats = app.add_subcommand("stats", "exact counts, degrees, ratios");
    auto* cmd_cliques = app.add_subcommand("cliques", "exact clique number and witness");
    auto* cmd_orbits = app.add_subcommand("orbits", "vertex/arc transitivity via reflections");
    auto* cmd_spectrum = app.add_subcommand("spectrum", "adjacency spectrum report");
    auto* cmd_identity =
        app.add_subcommand("verify-identity", "exact A^2 residual histogram (gamma-bar)");
    auto* cmd_gap = app.add_subcommand("gap-test", "seeded spectral-gap edge guarantee trials");
    auto* cmd_verify = app.add_subcommand("verify-all", "run the full claim registry");
    for (auto* sub : {cmd_build, cmd_export, cmd_stats, cmd_cliques, cmd_orbits, cmd_spectrum,
                      cmd_identity, cmd_gap, cmd_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        // parameter validation shared by all subcommands
        if (cfg.q == 0) {
            std::cerr << "usage error: --q is required\n";
            return 2;
        }
        FieldRef spec;
        try {
            spec = make_field(cfg);
        } catch (const FieldError& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return 2;
        }
        if (cfg.n <= 0 || cfg.k < 1 || cfg.k >= cfg.n) {
            std::cerr << "usage error: require n > k >= 1 (got n=" << cfg.n << ", k=" << cfg.k
                      << ")\n";
            return 2;
        }

        if (*cmd_build || *cmd_export) {
            OrthGraph g = build_graph(cfg, spec);
            std::string format = cfg.format.empty() ? "edgelist" : cfg.format;
            if (format == "json") {
                GraphStats s = stats(g, g.vertex_count() <= 2000 ? cfg.clique_budget : 0);
                write_text(cfg, stats_to_json(g, s).dump(2) + "\n");
            } else {
                emit_graph(cfg, g, format);
            }
            return 0;
        }
        if (*cmd_stats) {
            OrthGraph g = build_graph(cfg, spec);
            GraphStats s = stats(g, g.vertex_count() <= 2000 ? cfg.clique_budget : 0);
            write_text(cfg, stats_to_json(g, s).dump(2) + "\n");
            return 0;
        }
        if (*cmd_cliques) {
            OrthGraph g = build_graph(cfg, spec);
            std::vector<int> witness;
            int omega = max_clique(g, cfg.clique_budget, &witness);
            ordered_json j;
            j["clique_number"] = omega;
            j["witness"] = witness;
            bool lift = true;
            if (!witness.empty() && g.kind == GraphKind::GammaSquare) {
                Subspace span = g.vertices[size_t(witness[0])];
                for (size_t i = 1; i < witness.size(); ++i)
                    span = sum(span, g.vertices[size_t(witness[i])]);
                lift = span.dim() == g.k * omega && is_dotk_subspace(g.ambient, span);
                j["witness_span_is_dotkl"] = lift;
            }
            write_text(cfg, j.dump(2) + "\n");
            return lift ? 0 : 1;
        }
        if (*cmd_orbits) {
            OrthGraph g = build_graph(cfg, spec);
            auto gens = reflection_generators(g.ambient);
            OrbitCheckResult res = orbit_check(g, gens, cfg.arc_cap);
            write_text(cfg, orbit_result_to_json(res).dump(2) + "\n");
            return 0;
        }
        if (*cmd_spectrum) {
            OrthGraph g = build_graph(cfg, spec);
            SpectralReport rep = compute_spectrum(g, cfg.eig_cap, cfg.threads);
            if (cfg.format == "csv") {
                std::ostringstream os;
                os << "index,eigenvalue\n";
                for (size_t i = 0; i < rep.eigenvalues.size(); ++i)
                    os << i << ',' << round_report(rep.eigenvalues[i]) << '\n';
                write_text(cfg, os.str());
            } else {
                write_text(cfg, spectral_report_to_json(rep).dump(2) + "\n");
            }
            return 0;
        }
        if (*cmd_identity) {
            GlobalConfig bar_cfg = cfg;
            bar_cfg.graph = "bar";
            OrthGraph g = build_graph(bar_cfg, spec);
            IdentityResidual res = identity_residual(g, cfg.threads);
            write_text(cfg, identity_residual_to_json(res).dump(2) + "\n");
            return res.transverse_exact ? 0 : 1;
        }
        if (*cmd_gap) {
            OrthGraph g = build_graph(cfg, spec);
            SpectralReport rep = compute_spectrum(g, cfg.eig_cap, cfg.threads);
            GapTrialReport res = gap_test(g, rep, cfg.trials, cfg.seed);
            write_text(cfg, gap_report_to_json(res).dump(2) + "\n");
            return res.satisfiable && res.all_guaranteed_have_witness ? 0 : 1;
        }
        if (*cmd_verify) {
            VerifyOptions opt;
            opt.loop_policy =
                cfg.loops == "exclude" ? LoopPolicy::Exclude : LoopPolicy::Include;
            opt.eig_cap = cfg.eig_cap;
            opt.clique_budget = cfg.clique_budget;
            opt.gap_trials = cfg.trials;
            opt.seed = cfg.seed;
            opt.arc_cap = cfg.arc_cap;
            opt.cache_dir = cache_dir_of(cfg);
            opt.threads = cfg.threads;
            VerifyRun run = verify_all(cfg.n, cfg.k, spec, opt);
            write_text(cfg, verify_run_to_json(run, opt).dump(2) + "\n");
            for (const auto& c : run.claims) {
                std::cerr << "[" << to_string(c.status) << "] " << c.id;
                if (c.status == ClaimStatus::Fail)
                    std::cerr << " — expected " << c.expected << "; observed " << c.observed;
                std::cerr << "\n";
            }
            return run.all_passed() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
