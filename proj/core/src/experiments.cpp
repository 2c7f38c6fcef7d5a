#include "otoc/experiments.hpp"

#include "otoc/synthesis.hpp"
#include "otoc/version.hpp"

#include <json.hpp>

#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

namespace otoc {

namespace fs = std::filesystem;

std::string to_string(StateRecipeKind k) {
    switch (k) {
        case StateRecipeKind::all_up: return "all-up";
        case StateRecipeKind::ground_state_integrable: return "ground-state-integrable";
        case StateRecipeKind::ghz: return "ghz";
        case StateRecipeKind::random_pm_y: return "random-pm-y";
    }
    throw std::logic_error("unreachable recipe kind");
}

StateRecipeKind recipe_from_string(const std::string& name) {
    if (name == "all-up") return StateRecipeKind::all_up;
    if (name == "ground-state-integrable") return StateRecipeKind::ground_state_integrable;
    if (name == "ghz") return StateRecipeKind::ghz;
    if (name == "random-pm-y") return StateRecipeKind::random_pm_y;
    throw std::invalid_argument("unknown state recipe '" + name + "'");
}

Statevector prepare_state(const StateRecipe& recipe, int n, double J, double hZ,
                          std::uint64_t seed) {
    switch (recipe.kind) {
        case StateRecipeKind::all_up:
            return Statevector::all_zero(n);
        case StateRecipeKind::ghz:
            return Statevector::ghz(n);
        case StateRecipeKind::ground_state_integrable:
            return ExactEvolver(build_ising_hamiltonian(n, J, hZ, 0.0)).ground_state();
        case StateRecipeKind::random_pm_y: {
            std::mt19937_64 rng(seed);
            std::vector<bool> minus(static_cast<std::size_t>(n), false);
            if (recipe.pmy == PmyDistribution::uniform) {
                for (int q = 0; q < n; ++q) minus[static_cast<std::size_t>(q)] = rng() & 1;
            } else {
                // Exploration mode, not used by the reference experiments:
                // the minus-pattern Hamming weight follows a discretized
                // Gaussian around n/2.
                const double sigma = n / 4.0;
                std::vector<double> weights(static_cast<std::size_t>(n) + 1);
                for (int k = 0; k <= n; ++k) {
                    const double d = k - n / 2.0;
                    weights[static_cast<std::size_t>(k)] = std::exp(-d * d / (2 * sigma * sigma));
                }
                std::discrete_distribution<int> hamming(weights.begin(), weights.end());
                const int k = hamming(rng);
                std::vector<int> sites(static_cast<std::size_t>(n));
                for (int q = 0; q < n; ++q) sites[static_cast<std::size_t>(q)] = q;
                std::shuffle(sites.begin(), sites.end(), rng);
                for (int q = 0; q < k; ++q) minus[static_cast<std::size_t>(sites[q])] = true;
            }
            std::vector<std::array<Complex, 2>> locals;
            locals.reserve(static_cast<std::size_t>(n));
            for (int q = 0; q < n; ++q)
                locals.push_back(minus[static_cast<std::size_t>(q)] ? local_minus_y()
                                                                    : local_plus_y());
            return Statevector::product(locals);
        }
    }
    throw std::logic_error("unreachable recipe kind");
}

std::vector<double> TimeGrid::times() const {
    if (!(stride > 0) || stop < start)
        throw std::invalid_argument("time grid needs stride > 0 and stop >= start");
    std::vector<double> ts;
    const auto count = static_cast<long long>(std::floor((stop - start) / stride + 1e-9));
    ts.reserve(static_cast<std::size_t>(count) + 1);
    for (long long k = 0; k <= count; ++k) ts.push_back(start + static_cast<double>(k) * stride);
    return ts;
}

void RunConfig::validate() const {
    if (n < 2) throw std::invalid_argument("config: n must be >= 2");
    if (plan.order != 1 && plan.order != 2 && plan.order != 4)
        throw std::invalid_argument("config: order must be 1, 2 or 4");
    if (!(plan.dt > 0)) throw std::invalid_argument("config: dt must be positive");
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("config: i and j must lie in 1..n");
    for (int jj : j_sweep)
        if (jj < 1 || jj > n) throw std::invalid_argument("config: j-sweep entry outside 1..n");
    if (recipe.samples < 1) throw std::invalid_argument("config: samples must be >= 1");
    if (times.start < 0) throw std::invalid_argument("config: time grid must start at t >= 0");
    times.times();  // validates stride/stop
    if (jobs < 0) throw std::invalid_argument("config: jobs must be >= 0");
    if (J == 0.0 && hZ == 0.0 && hX == 0.0)
        throw std::invalid_argument("config: all couplings are zero");
}

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string pmy_to_string(PmyDistribution d) {
    return d == PmyDistribution::uniform ? "uniform" : "gauss-hamming";
}

PmyDistribution pmy_from_string(const std::string& name) {
    if (name == "uniform") return PmyDistribution::uniform;
    if (name == "gauss-hamming") return PmyDistribution::gauss_hamming;
    throw std::invalid_argument("unknown pm-y distribution '" + name + "'");
}

nlohmann::json config_json_object(const RunConfig& c) {
    nlohmann::json doc;
    doc["n"] = c.n;
    doc["J"] = c.J;
    doc["hZ"] = c.hZ;
    doc["hX"] = c.hX;
    doc["order"] = c.plan.order;
    doc["dt"] = c.plan.dt;
    doc["split"] = to_string(c.plan.split);
    doc["t-start"] = c.times.start;
    doc["t-max"] = c.times.stop;
    doc["stride"] = c.times.stride;
    doc["i"] = c.i;
    doc["j"] = c.j;
    doc["j-sweep"] = c.j_sweep;
    doc["recipe"] = to_string(c.recipe.kind);
    doc["samples"] = c.recipe.samples;
    doc["pmy-dist"] = pmy_to_string(c.recipe.pmy);
    std::vector<std::string> recipe_names;
    for (auto k : c.recipes) recipe_names.push_back(to_string(k));
    doc["recipes"] = recipe_names;
    doc["out"] = c.out_dir;
    doc["seed"] = c.seed;
    doc["method"] = to_string(c.method);
    doc["evolution"] = to_string(c.evolution);
    doc["tolerance"] = c.tolerance;
    doc["jobs"] = c.jobs;
    return doc;
}

}  // namespace

std::string config_to_json(const RunConfig& config) { return config_json_object(config).dump(2); }

RunConfig config_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    RunConfig c;
    c.n = doc.value("n", c.n);
    c.J = doc.value("J", c.J);
    c.hZ = doc.value("hZ", c.hZ);
    c.hX = doc.value("hX", c.hX);
    c.plan.order = doc.value("order", c.plan.order);
    c.plan.dt = doc.value("dt", c.plan.dt);
    if (doc.contains("split")) c.plan.split = split_from_string(doc.at("split"));
    c.times.start = doc.value("t-start", c.times.start);
    c.times.stop = doc.value("t-max", c.times.stop);
    c.times.stride = doc.value("stride", c.times.stride);
    c.i = doc.value("i", c.i);
    c.j = doc.value("j", c.j);
    if (doc.contains("j-sweep")) c.j_sweep = doc.at("j-sweep").get<std::vector<int>>();
    if (doc.contains("recipe")) c.recipe.kind = recipe_from_string(doc.at("recipe"));
    c.recipe.samples = doc.value("samples", c.recipe.samples);
    if (doc.contains("pmy-dist")) c.recipe.pmy = pmy_from_string(doc.at("pmy-dist"));
    if (doc.contains("recipes")) {
        c.recipes.clear();
        for (const auto& name : doc.at("recipes"))
            c.recipes.push_back(recipe_from_string(name.get<std::string>()));
    }
    c.out_dir = doc.value("out", c.out_dir);
    c.seed = doc.value("seed", c.seed);
    if (doc.contains("method")) c.method = method_from_string(doc.at("method"));
    if (doc.contains("evolution")) c.evolution = evolution_from_string(doc.at("evolution"));
    c.tolerance = doc.value("tolerance", c.tolerance);
    c.jobs = doc.value("jobs", c.jobs);
    return c;
}

namespace {

void run_parallel(std::vector<std::function<void()>>& tasks, int jobs) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        for (auto& task : tasks) task();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            try {
                tasks[k]();
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("short write to " + path.string());
}

fs::path prepare_out_dir(const RunConfig& config) {
    fs::path dir(config.out_dir);
    fs::create_directories(dir);
    return dir;
}

ExperimentReport make_report(std::string experiment, const RunConfig& config) {
    ExperimentReport report;
    report.experiment = std::move(experiment);
    report.config = config;
    report.library = library_stamp();
    return report;
}

void finalize_report(ExperimentReport& report, const fs::path& dir) {
    write_text_file(dir / ("report_" + report.experiment + ".json"), report_json(report));
}

std::vector<int> spreading_columns(const RunConfig& config) {
    if (!config.j_sweep.empty()) return config.j_sweep;
    std::vector<int> js;
    for (int j = 1; j <= config.n; ++j)
        if (j != config.i) js.push_back(j);
    return js;
}

// Norm distance of the Trotter-evolved state against the oracle at the
// final grid time; reported for trotter runs within the oracle limit.
void add_final_state_metric(ExperimentReport& report, const RunConfig& config,
                            const PauliSumHamiltonian& h, const Statevector& psi) {
    if (config.evolution != EvolutionSpec::Kind::trotter || config.n > kDefaultOracleLimit)
        return;
    const double t_final = config.times.times().back();
    Statevector circuit = psi;
    apply_trotter_evolution(h, config.plan, t_final, false, circuit);
    const Statevector exact = ExactEvolver(h).evolve(t_final, psi);
    const auto d = norm_distance(circuit, exact);
    report.metrics["final_state_distance_raw"] = d.raw;
    report.metrics["final_state_distance_aligned"] = d.aligned;
}

}  // namespace

std::string report_json(const ExperimentReport& report) {
    nlohmann::json doc;
    doc["experiment"] = report.experiment;
    doc["library"] = report.library;
    doc["config"] = config_json_object(report.config);
    auto manifest = nlohmann::json::array();
    for (const auto& f : report.manifest) manifest.push_back({{"file", f.name}, {"rows", f.rows}});
    doc["manifest"] = std::move(manifest);
    doc["metrics"] = report.metrics;
    doc["notes"] = report.notes;
    return doc.dump(2);
}

ExperimentReport run_spreading(const RunConfig& config) {
    config.validate();
    const auto dir = prepare_out_dir(config);
    const auto h = build_ising_hamiltonian(config.n, config.J, config.hZ, config.hX);
    const auto psi = prepare_state(config.recipe, config.n, config.J, config.hZ, config.seed);
    const auto times = config.times.times();
    const auto js = spreading_columns(config);
    const auto evolution = config.evolution_spec();

    std::vector<OtocSeries> columns(js.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t k = 0; k < js.size(); ++k) {
        tasks.push_back([&, k] {
            const ButterflyConfig cfg{config.i, js[k], config.n};
            columns[k] = commutator_series(psi, cfg, h, evolution, times, config.method,
                                           to_string(config.recipe.kind));
        });
    }
    run_parallel(tasks, config.jobs);

    ExperimentReport report = make_report("spreading", config);
    const std::string regime = config.regime();
    for (const auto& series : columns) {
        const std::string base = series_filename(series, regime, "");
        write_text_file(dir / (base + "csv"), series_csv(series));
        write_text_file(dir / (base + "json"), series_json(series));
        report.manifest.push_back({base + "csv", series.points.size()});
        report.manifest.push_back({base + "json", series.points.size()});
    }

    std::string matrix = "t";
    for (int j : js) matrix += ",j" + std::to_string(j);
    matrix += "\n";
    for (std::size_t row = 0; row < times.size(); ++row) {
        matrix += fmt17(times[row]);
        for (const auto& series : columns) matrix += "," + fmt17(series.points[row].C);
        matrix += "\n";
    }
    const std::string matrix_name =
        "spreading_" + regime + "_" + to_string(config.method) + "_matrix.csv";
    write_text_file(dir / matrix_name, matrix);
    report.manifest.push_back({matrix_name, times.size()});

    report.notes.push_back("regime " + regime + " selected by hX = " + fmt17(config.hX));
    add_final_state_metric(report, config, h, psi);
    double c_max = 0.0;
    for (const auto& series : columns)
        for (const auto& p : series.points) c_max = std::max(c_max, p.C);
    report.metrics["max_C"] = c_max;

    finalize_report(report, dir);
    return report;
}

namespace {

struct StateComparison {
    std::vector<double> c_circuit;
    std::vector<double> c_exact;
    std::vector<double> err_raw;
    std::vector<double> err_aligned;
};

// Trotter trajectory against the oracle on the grid. When every grid
// time is a whole number of steps the trajectory is advanced in place;
// the gate sequence equals the fresh per-point circuits either way.
void trace_errors(const PauliSumHamiltonian& h, const ExactEvolver& evolver,
                  const TrotterPlan& plan, const Statevector& psi,
                  const std::vector<double>& times, StateComparison& out) {
    bool aligned_grid = true;
    std::vector<long long> steps(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        steps[k] = std::llround(times[k] / plan.dt);
        if (std::abs(times[k] - static_cast<double>(steps[k]) * plan.dt) > 1e-9)
            aligned_grid = false;
        if (k > 0 && steps[k] < steps[k - 1]) aligned_grid = false;
    }

    out.err_raw.resize(times.size());
    out.err_aligned.resize(times.size());
    if (aligned_grid) {
        const Circuit step = trotter_step(h, plan.dt, plan.order, plan.split);
        Statevector trajectory = psi;
        long long done = 0;
        for (std::size_t k = 0; k < times.size(); ++k) {
            for (; done < steps[k]; ++done) apply_in_place(step, trajectory);
            const auto d = norm_distance(trajectory, evolver.evolve(times[k], psi));
            out.err_raw[k] = d.raw;
            out.err_aligned[k] = d.aligned;
        }
        return;
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
        Statevector circuit = psi;
        apply_trotter_evolution(h, plan, times[k], false, circuit);
        const auto d = norm_distance(circuit, evolver.evolve(times[k], psi));
        out.err_raw[k] = d.raw;
        out.err_aligned[k] = d.aligned;
    }
}

StateComparison compare_state(const RunConfig& config, const PauliSumHamiltonian& h,
                              const ExactEvolver& evolver, const StateRecipe& recipe,
                              const std::vector<double>& times) {
    const ButterflyConfig cfg{config.i, config.j, config.n};
    StateComparison result;
    result.c_circuit.assign(times.size(), 0.0);
    result.c_exact.assign(times.size(), 0.0);
    result.err_raw.assign(times.size(), 0.0);
    result.err_aligned.assign(times.size(), 0.0);

    const int samples = (recipe.kind == StateRecipeKind::random_pm_y) ? recipe.samples : 1;
    for (int sample = 0; sample < samples; ++sample) {
        const auto psi =
            prepare_state(recipe, config.n, config.J, config.hZ, config.seed + sample);
        const auto circuit_series = commutator_series(psi, cfg, h, config.evolution_spec(), times,
                                                      config.method, to_string(recipe.kind));
        const auto exact_series =
            commutator_series(psi, cfg, evolver, times, config.method, to_string(recipe.kind));
        StateComparison trace;
        trace_errors(h, evolver, config.plan, psi, times, trace);
        for (std::size_t k = 0; k < times.size(); ++k) {
            result.c_circuit[k] += circuit_series.points[k].C / samples;
            result.c_exact[k] += exact_series.points[k].C / samples;
            result.err_raw[k] = std::max(result.err_raw[k], trace.err_raw[k]);
            result.err_aligned[k] = std::max(result.err_aligned[k], trace.err_aligned[k]);
        }
    }
    return result;
}

}  // namespace

ExperimentReport run_state_comparison(const RunConfig& config) {
    config.validate();
    if (config.evolution != EvolutionSpec::Kind::trotter)
        throw std::invalid_argument("the states experiment compares Trotter circuits against "
                                    "the oracle; --evolution trotter required");
    const auto dir = prepare_out_dir(config);
    const auto h = build_ising_hamiltonian(config.n, config.J, config.hZ, config.hX);
    const ExactEvolver evolver(h);
    const auto times = config.times.times();

    ExperimentReport report = make_report("states", config);
    if (std::abs(evolver.eigenvalues()(0) - evolver.eigenvalues()(1)) < 1e-12)
        report.notes.push_back(
            "integrable ground space is degenerate; lowest-index eigenvector used");

    std::vector<StateComparison> results(config.recipes.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t r = 0; r < config.recipes.size(); ++r) {
        tasks.push_back([&, r] {
            StateRecipe recipe = config.recipe;
            recipe.kind = config.recipes[r];
            results[r] = compare_state(config, h, evolver, recipe, times);
        });
    }
    run_parallel(tasks, config.jobs);

    double worst_err = 0.0;
    for (std::size_t r = 0; r < config.recipes.size(); ++r) {
        const auto& res = results[r];
        const std::string name = "states_" + to_string(config.recipes[r]) + ".csv";
        std::string csv = "t,C_circuit,C_exact,err_raw,err_aligned\n";
        double max_raw = 0.0, max_dc = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k) {
            csv += fmt17(times[k]) + "," + fmt17(res.c_circuit[k]) + "," + fmt17(res.c_exact[k]) +
                   "," + fmt17(res.err_raw[k]) + "," + fmt17(res.err_aligned[k]) + "\n";
            max_raw = std::max(max_raw, res.err_raw[k]);
            max_dc = std::max(max_dc, std::abs(res.c_circuit[k] - res.c_exact[k]));
        }
        write_text_file(dir / name, csv);
        report.manifest.push_back({name, times.size()});
        report.metrics["max_err_raw_" + to_string(config.recipes[r])] = max_raw;
        report.metrics["max_dC_" + to_string(config.recipes[r])] = max_dc;
        worst_err = std::max(worst_err, max_raw);
    }
    report.metrics["max_err_raw"] = worst_err;

    finalize_report(report, dir);
    if (worst_err > config.tolerance)
        throw oracle_mismatch_error("state error " + fmt17(worst_err) +
                                    " exceeds tolerance " + fmt17(config.tolerance));
    return report;
}

ExperimentReport run_trotter_tradeoff(const RunConfig& config) {
    config.validate();
    if (config.recipe.kind != StateRecipeKind::all_up)
        throw std::invalid_argument("the tradeoff experiment uses the separable all-up state");
    const auto dir = prepare_out_dir(config);
    const auto h = build_ising_hamiltonian(config.n, config.J, config.hZ, config.hX);
    const ExactEvolver evolver(h);
    const auto times = config.times.times();
    const auto psi = prepare_state(config.recipe, config.n, config.J, config.hZ, config.seed);
    const ButterflyConfig cfg{config.i, config.j, config.n};

    struct Variant {
        std::string label;
        TrotterPlan plan;
    };
    const std::vector<Variant> variants = {
        {"o4_dt0.001", {4, 0.001, TrotterSplit::hz_hx}},
        {"o4_dt0.1", {4, 0.1, TrotterSplit::hz_hx}},
        {"o1_dt0.01_hzhx", {1, 0.01, TrotterSplit::hz_hx}},
        {"o1_dt0.01_term", {1, 0.01, TrotterSplit::per_term}},
    };

    OtocSeries exact_series;
    std::vector<OtocSeries> series(variants.size());
    std::vector<std::function<void()>> tasks;
    tasks.push_back([&] {
        exact_series = commutator_series(psi, cfg, evolver, times, config.method,
                                         to_string(config.recipe.kind));
    });
    for (std::size_t v = 0; v < variants.size(); ++v) {
        tasks.push_back([&, v] {
            series[v] = commutator_series(psi, cfg, h, {EvolutionSpec::Kind::trotter,
                                                        variants[v].plan},
                                          times, config.method, to_string(config.recipe.kind));
        });
    }
    run_parallel(tasks, config.jobs);

    ExperimentReport report = make_report("tradeoff", config);
    std::string csv = "t,C_exact";
    for (const auto& v : variants) csv += ",C_" + v.label;
    csv += "\n";
    for (std::size_t k = 0; k < times.size(); ++k) {
        csv += fmt17(times[k]) + "," + fmt17(exact_series.points[k].C);
        for (const auto& s : series) csv += "," + fmt17(s.points[k].C);
        csv += "\n";
    }
    write_text_file(dir / "tradeoff.csv", csv);
    report.manifest.push_back({"tradeoff.csv", times.size()});

    for (std::size_t v = 0; v < variants.size(); ++v) {
        double max_dc = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k)
            max_dc = std::max(max_dc,
                              std::abs(series[v].points[k].C - exact_series.points[k].C));
        report.metrics["max_dC_" + variants[v].label] = max_dc;

        const auto& plan = variants[v].plan;
        const auto depth = depth_report(trotter_step(h, plan.dt, plan.order, plan.split));
        const double steps = std::ceil(times.back() / plan.dt - 1e-9);
        report.metrics["step_depth_" + variants[v].label] = static_cast<double>(depth.depth);
        report.metrics["step_gates_" + variants[v].label] =
            static_cast<double>(depth.gate_count);
        report.metrics["step_cnots_" + variants[v].label] =
            static_cast<double>(depth.cnot_count);
        report.metrics["total_depth_" + variants[v].label] =
            static_cast<double>(depth.depth) * steps;
    }
    report.notes.push_back(
        "order-1 hzhx and per-term splits emit identical gate sequences for this Hamiltonian");

    finalize_report(report, dir);
    return report;
}

SynthCheckResult run_synthesis_check(std::uint64_t seed) {
    SynthCheckResult result;
    const double angles[] = {0.1, 0.7, -1.3};
    std::mt19937_64 rng(seed);

    auto spectral_distance = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        return Eigen::JacobiSVD<Eigen::MatrixXcd>(a - b).singularValues()(0);
    };
    auto check_string = [&](const PauliString& s, double theta) {
        const Eigen::MatrixXcd expected = propagator(dense_matrix(s), theta);
        const Eigen::MatrixXcd actual = circuit_unitary(synthesize_exponential(s, theta).circuit);
        return spectral_distance(actual, expected);
    };

    for (int n = 1; n <= 3; ++n) {
        SynthCheckRow row;
        row.n = n;
        const std::uint64_t words = (std::uint64_t(1) << (2 * n)) - 1;
        for (std::uint64_t code = 1; code <= words; ++code) {
            std::vector<PauliLetter> letters(static_cast<std::size_t>(n));
            for (int q = 0; q < n; ++q)
                letters[static_cast<std::size_t>(q)] =
                    static_cast<PauliLetter>((code >> (2 * q)) & 3);
            const PauliString s(std::move(letters), 1.0);
            for (double theta : angles) {
                row.max_spectral_distance =
                    std::max(row.max_spectral_distance, check_string(s, theta));
                ++row.cases;
            }
        }
        row.pass = row.max_spectral_distance < result.tolerance;
        result.rows.push_back(row);
    }

    std::uniform_int_distribution<int> letter_dist(0, 3);
    std::uniform_real_distribution<double> theta_dist(-2.0, 2.0);
    std::uniform_real_distribution<double> coeff_dist(0.5, 2.0);
    for (int n = 4; n <= 5; ++n) {
        SynthCheckRow row;
        row.n = n;
        while (row.cases < 200) {
            std::vector<PauliLetter> letters(static_cast<std::size_t>(n));
            bool identity = true;
            for (int q = 0; q < n; ++q) {
                letters[static_cast<std::size_t>(q)] = static_cast<PauliLetter>(letter_dist(rng));
                identity &= letters[static_cast<std::size_t>(q)] == PauliLetter::I;
            }
            if (identity) continue;
            const double sign = (rng() & 1) ? 1.0 : -1.0;
            const PauliString s(std::move(letters), sign * coeff_dist(rng));
            row.max_spectral_distance =
                std::max(row.max_spectral_distance, check_string(s, theta_dist(rng)));
            ++row.cases;
        }
        row.pass = row.max_spectral_distance < result.tolerance;
        result.rows.push_back(row);
    }

    result.ok = true;
    for (const auto& row : result.rows) result.ok &= row.pass;
    return result;
}

}  // namespace otoc
