#include "otoc/experiments.hpp"
#include "otoc/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitOracleMismatch = 3;

// Bound CLI values plus their option handles so file-config values are
// only overridden by flags the user actually passed.
struct CommonOptions {
    int n = 0;
    double J = 0, hZ = 0, hX = 0;
    int order = 0;
    double dt = 0;
    std::string split;
    double t_start = 0, t_max = 0, stride = 0;
    int i = 0, j = 0;
    std::vector<int> j_sweep;
    std::string recipe;
    std::vector<std::string> recipes;
    int samples = 0;
    std::string pmy;
    std::string out;
    std::uint64_t seed = 0;
    std::string method, evolution;
    double tolerance = 0;
    int jobs = 0;
    std::string config_path;

    std::map<std::string, CLI::Option*> opts;

    void add_to(CLI::App& cmd) {
        opts["n"] = cmd.add_option("--n", n, "chain length (qubits)");
        opts["J"] = cmd.add_option("--J", J, "ZZ coupling");
        opts["hZ"] = cmd.add_option("--hZ", hZ, "longitudinal field");
        opts["hX"] = cmd.add_option("--hX", hX, "transverse field (0 = integrable)");
        opts["order"] = cmd.add_option("--order", order, "Trotter order")
                            ->check(CLI::IsMember({1, 2, 4}));
        opts["dt"] = cmd.add_option("--dt", dt, "Trotter step, units of 1/J");
        opts["split"] = cmd.add_option("--split", split, "term grouping")
                            ->check(CLI::IsMember({"hzhx", "term"}));
        opts["t-start"] = cmd.add_option("--t-start", t_start, "grid start time");
        opts["t-max"] = cmd.add_option("--t-max", t_max, "grid stop time");
        opts["stride"] = cmd.add_option("--stride", stride, "grid output stride");
        opts["i"] = cmd.add_option("--i", i, "butterfly site of W = X_i");
        opts["j"] = cmd.add_option("--j", j, "probe site of V = X_j");
        opts["j-sweep"] = cmd.add_option("--j-sweep", j_sweep, "explicit spreading columns");
        opts["recipe"] = cmd.add_option("--recipe", recipe, "initial state recipe")
                             ->check(CLI::IsMember({"all-up", "ground-state-integrable", "ghz",
                                                    "random-pm-y"}));
        opts["recipes"] = cmd.add_option("--recipes", recipes, "states-run recipe list");
        opts["samples"] = cmd.add_option("--samples", samples, "random-pm-y samples to average");
        opts["pmy-dist"] = cmd.add_option("--pmy-dist", pmy, "random-pm-y sign distribution")
                               ->check(CLI::IsMember({"uniform", "gauss-hamming"}));
        opts["out"] = cmd.add_option("--out", out, "output directory");
        opts["seed"] = cmd.add_option("--seed", seed, "RNG seed; fixes all randomness");
        opts["method"] = cmd.add_option("--method", method, "OTOC evaluation method")
                             ->check(CLI::IsMember({"interf", "direct"}));
        opts["evolution"] = cmd.add_option("--evolution", evolution, "evolution backend")
                                ->check(CLI::IsMember({"trotter", "exact"}));
        opts["tolerance"] = cmd.add_option("--tolerance", tolerance,
                                           "circuit-vs-oracle gate (states run)");
        opts["jobs"] = cmd.add_option("--jobs", jobs, "parallel sweep jobs (0 = all cores)");
        cmd.add_option("--config", config_path, "JSON config mirroring these flags")
            ->check(CLI::ExistingFile);
    }

    bool passed(const std::string& name) const {
        const auto it = opts.find(name);
        return it != opts.end() && it->second->count() > 0;
    }

    otoc::RunConfig merge(const otoc::RunConfig& defaults) const {
        otoc::RunConfig cfg = defaults;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            std::stringstream buffer;
            buffer << in.rdbuf();
            cfg = otoc::config_from_json(buffer.str());
        }
        if (passed("n")) cfg.n = n;
        if (passed("J")) cfg.J = J;
        if (passed("hZ")) cfg.hZ = hZ;
        if (passed("hX")) cfg.hX = hX;
        if (passed("order")) cfg.plan.order = order;
        if (passed("dt")) cfg.plan.dt = dt;
        if (passed("split")) cfg.plan.split = otoc::split_from_string(split);
        if (passed("t-start")) cfg.times.start = t_start;
        if (passed("t-max")) cfg.times.stop = t_max;
        if (passed("stride")) cfg.times.stride = stride;
        if (passed("i")) cfg.i = i;
        if (passed("j")) cfg.j = j;
        if (passed("j-sweep")) cfg.j_sweep = j_sweep;
        if (passed("recipe")) cfg.recipe.kind = otoc::recipe_from_string(recipe);
        if (passed("recipes")) {
            cfg.recipes.clear();
            for (const auto& name : recipes) cfg.recipes.push_back(otoc::recipe_from_string(name));
        }
        if (passed("samples")) cfg.recipe.samples = samples;
        if (passed("pmy-dist"))
            cfg.recipe.pmy = (pmy == "uniform") ? otoc::PmyDistribution::uniform
                                                : otoc::PmyDistribution::gauss_hamming;
        if (passed("out")) cfg.out_dir = out;
        if (passed("seed")) cfg.seed = seed;
        if (passed("method")) cfg.method = otoc::method_from_string(method);
        if (passed("evolution")) cfg.evolution = otoc::evolution_from_string(evolution);
        if (passed("tolerance")) cfg.tolerance = tolerance;
        if (passed("jobs")) cfg.jobs = jobs;
        return cfg;
    }
};

void print_report(const otoc::ExperimentReport& report, double seconds) {
    std::printf("experiment: %s (%s)\n", report.experiment.c_str(), report.library.c_str());
    std::printf("output dir: %s\n", report.config.out_dir.c_str());
    for (const auto& f : report.manifest)
        std::printf("  wrote %s (%zu rows)\n", f.name.c_str(), f.rows);
    for (const auto& [key, value] : report.metrics)
        std::printf("  metric %s = %.6g\n", key.c_str(), value);
    for (const auto& note : report.notes) std::printf("  note: %s\n", note.c_str());
    std::printf("wall time: %.2f s\n", seconds);
}

int run_experiment(const otoc::RunConfig& cfg,
                   otoc::ExperimentReport (*runner)(const otoc::RunConfig&)) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = runner(cfg);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    print_report(report, elapsed.count());
    return 0;
}

int run_synthcheck(std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = otoc::run_synthesis_check(seed);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::printf(" n  cases  max spectral distance  status\n");
    for (const auto& row : result.rows)
        std::printf("%2d  %5d  %21.3e  %s\n", row.n, row.cases, row.max_spectral_distance,
                    row.pass ? "PASS" : "FAIL");
    std::printf("tolerance %.1e, wall time %.2f s\n", result.tolerance, elapsed.count());
    return result.ok ? 0 : kExitOracleMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(otoc::kLibraryName) +
                 ": OTOC circuit simulation of a transverse-field Ising chain"};
    app.require_subcommand(1);

    auto* spreading = app.add_subcommand(
        "spreading", "C_{ij}(t) heatmap data over a j sweep (integrable or chaotic)");
    auto* states = app.add_subcommand(
        "states", "circuit-vs-oracle C(t) and state error for the four initial states");
    auto* tradeoff = app.add_subcommand(
        "tradeoff", "C(t) for exact vs order-4/order-1 Trotter variants plus depth reports");
    auto* synthcheck = app.add_subcommand(
        "synthcheck", "Pauli-exponential synthesis equivalence suite");

    CommonOptions spreading_opts, states_opts, tradeoff_opts;
    spreading_opts.add_to(*spreading);
    states_opts.add_to(*states);
    tradeoff_opts.add_to(*tradeoff);
    std::uint64_t synth_seed = 1;
    synthcheck->add_option("--seed", synth_seed, "RNG seed for the random string sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*spreading) {
            otoc::RunConfig defaults;
            return run_experiment(spreading_opts.merge(defaults), otoc::run_spreading);
        }
        if (*states) {
            otoc::RunConfig defaults;
            return run_experiment(states_opts.merge(defaults), otoc::run_state_comparison);
        }
        if (*tradeoff) {
            otoc::RunConfig defaults;
            defaults.times.stop = 3.0;
            defaults.times.stride = 0.1;
            return run_experiment(tradeoff_opts.merge(defaults), otoc::run_trotter_tradeoff);
        }
        if (*synthcheck) return run_synthcheck(synth_seed);
    } catch (const otoc::oracle_mismatch_error& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return kExitOracleMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
