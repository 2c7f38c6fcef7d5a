#pragma once

#include "otoc/otoc.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace otoc {

enum class StateRecipeKind { all_up, ground_state_integrable, ghz, random_pm_y };

std::string to_string(StateRecipeKind k);
StateRecipeKind recipe_from_string(const std::string& name);

enum class PmyDistribution { uniform, gauss_hamming };

struct StateRecipe {
    StateRecipeKind kind = StateRecipeKind::all_up;
    int samples = 1;  // random-pm-y curves averaged per run
    PmyDistribution pmy = PmyDistribution::uniform;
};

/// all-up -> |0...0> (identifying |up> with |0>), ghz -> the n-qubit GHZ
/// state, ground-state-integrable -> lowest eigenvector of the hX = 0
/// chain, random-pm-y -> a seeded product of |+y>/|-y> sites.
Statevector prepare_state(const StateRecipe& recipe, int n, double J, double hZ,
                          std::uint64_t seed);

struct TimeGrid {
    double start = 0.0;
    double stop = 4.0;
    double stride = 0.02;

    std::vector<double> times() const;
};

struct RunConfig {
    int n = 9;
    double J = -1.0;
    double hZ = 1.0;
    double hX = 1.0;
    TrotterPlan plan;
    TimeGrid times;
    int i = 5;
    int j = 3;
    std::vector<int> j_sweep;  // spreading columns; empty -> {1..n} \ {i}
    StateRecipe recipe;
    std::vector<StateRecipeKind> recipes{
        StateRecipeKind::all_up, StateRecipeKind::ground_state_integrable, StateRecipeKind::ghz,
        StateRecipeKind::random_pm_y};
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    OtocMethod method = OtocMethod::interferometric;
    EvolutionSpec::Kind evolution = EvolutionSpec::Kind::trotter;
    double tolerance = 1e-10;  // circuit-vs-oracle gate for the states run
    int jobs = 0;              // parallel sweep width; 0 -> hardware concurrency

    void validate() const;  // throws std::invalid_argument
    std::string regime() const { return hX == 0.0 ? "integrable" : "chaotic"; }
    EvolutionSpec evolution_spec() const { return {evolution, plan}; }
};

std::string config_to_json(const RunConfig& config);
RunConfig config_from_json(const std::string& text);

/// Raised when a circuit-vs-oracle comparison exceeds the configured
/// tolerance; the CLI maps it to exit code 3.
struct oracle_mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileEntry {
    std::string name;
    std::size_t rows = 0;
};

struct ExperimentReport {
    std::string experiment;
    RunConfig config;
    std::vector<FileEntry> manifest;
    std::map<std::string, double> metrics;
    std::vector<std::string> notes;
    std::string library;
};

std::string report_json(const ExperimentReport& report);

/// C_{ij}(t) over the j sweep plus a combined matrix CSV (rows = t,
/// columns = j). The regime follows hX: 0 integrable, nonzero chaotic.
ExperimentReport run_spreading(const RunConfig& config);

/// Per-recipe C(t) from the Trotterized circuit and from the exact
/// oracle, with the state norm distance traced alongside.
ExperimentReport run_state_comparison(const RunConfig& config);

/// C(t) for {exact, order-4 dt=0.001, order-4 dt=0.1, order-1 dt=0.01}
/// on a common grid, with per-step depth reports per variant.
ExperimentReport run_trotter_tradeoff(const RunConfig& config);

struct SynthCheckRow {
    int n = 0;
    int cases = 0;
    double max_spectral_distance = 0.0;
    bool pass = false;
};

struct SynthCheckResult {
    std::vector<SynthCheckRow> rows;
    double tolerance = 1e-12;
    bool ok = false;
};

/// Exhaustive circuit-vs-expm equivalence at n <= 3 plus 200 random
/// strings each at n in {4, 5}.
SynthCheckResult run_synthesis_check(std::uint64_t seed);

}  // namespace otoc
