#pragma once

#include "otoc/circuit.hpp"
#include "otoc/pauli.hpp"
#include "otoc/statevector.hpp"
#include "otoc/trotter.hpp"

#include <string>
#include <vector>

namespace otoc {

/// W = X_i is the butterfly perturbation, V = X_j the probe.
struct ButterflyConfig {
    int i = 5;
    int j = 3;
    int n = 9;
};

struct OtocPoint {
    double t = 0.0;
    double reF = 1.0;
    double C = 0.0;  // 2 (1 - reF) for unitary Hermitian W, V
};

enum class OtocMethod { interferometric, direct };

std::string to_string(OtocMethod m);
OtocMethod method_from_string(const std::string& name);

struct EvolutionSpec {
    enum class Kind { trotter, exact };
    Kind kind = Kind::trotter;
    TrotterPlan plan;  // ignored for exact evolution
};

std::string to_string(EvolutionSpec::Kind k);
EvolutionSpec::Kind evolution_from_string(const std::string& name);

struct OtocSeries {
    ButterflyConfig config;
    std::vector<double> times;
    std::vector<OtocPoint> points;
    OtocMethod method = OtocMethod::interferometric;
    EvolutionSpec evolution;
    std::string initial_state;
};

/// The ancilla interferometer as an explicit (n+1)-qubit circuit: the
/// ancilla (qubit n+1) enters |+>, V = X_j runs on the |0> branch before
/// the forward evolution, W = X_i runs unconditionally between forward
/// and backward evolution, and V runs on the |1> branch at the end.
/// <X_ancilla> of the output state is Re F_ij.
Circuit interferometric_circuit(const ButterflyConfig& cfg, const Circuit& forward);

double interferometric_reF(const Statevector& psi, const ButterflyConfig& cfg,
                           const Circuit& forward);
double interferometric_reF(const Statevector& psi, const ButterflyConfig& cfg,
                           const EvolutionCircuit& U);
/// Protocol with the dense propagator substituted for the circuit U.
double interferometric_reF(const Statevector& psi, const ButterflyConfig& cfg,
                           const ExactEvolver& evolver, double t);

/// Shot-sampled ancilla readout for realism studies; acceptance paths
/// always use the exact expectation.
double interferometric_reF_sampled(const Statevector& psi, const ButterflyConfig& cfg,
                                   const Circuit& forward, int shots, std::mt19937_64& rng);

/// Four-point evaluation of F_ij(t) = <psi| U+ X_i U X_j U+ X_i U X_j |psi>
/// as the inner product of two evolved states; no ancilla.
Complex direct_F(const Statevector& psi, const ButterflyConfig& cfg, const Circuit& forward);
Complex direct_F(const Statevector& psi, const ButterflyConfig& cfg, const ExactEvolver& evolver,
                 double t);

double direct_reF(const Statevector& psi, const ButterflyConfig& cfg, const Circuit& forward);
double direct_reF(const Statevector& psi, const ButterflyConfig& cfg, const ExactEvolver& evolver,
                  double t);

/// C_ij over a strictly increasing time grid. Each point evolves fresh
/// from the initial state; Trotterized points stream the step circuit
/// instead of materializing U(t), which applies the identical gate
/// sequence.
OtocSeries commutator_series(const Statevector& psi, const ButterflyConfig& cfg,
                             const PauliSumHamiltonian& h, const EvolutionSpec& evolution,
                             const std::vector<double>& times, OtocMethod method,
                             std::string initial_state = "");

/// Exact-evolution series sharing a caller-owned eigendecomposition.
OtocSeries commutator_series(const Statevector& psi, const ButterflyConfig& cfg,
                             const ExactEvolver& evolver, const std::vector<double>& times,
                             OtocMethod method, std::string initial_state = "");

std::string series_csv(const OtocSeries& series);          // columns t,reF,C
std::string series_json(const OtocSeries& series);         // full metadata
std::string series_filename(const OtocSeries& series, const std::string& regime,
                            const std::string& extension);  // otoc_i{i}_j{j}_{regime}_{method}

}  // namespace otoc
