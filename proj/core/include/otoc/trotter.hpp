#pragma once

#include "otoc/circuit.hpp"
#include "otoc/pauli.hpp"
#include "otoc/statevector.hpp"

#include <string>

namespace otoc {

enum class TrotterSplit { hz_hx, per_term };

std::string to_string(TrotterSplit split);
TrotterSplit split_from_string(const std::string& name);

struct TrotterPlan {
    int order = 4;  // 1, 2 or 4
    double dt = 0.001;
    TrotterSplit split = TrotterSplit::hz_hx;
};

/// One product-formula step for e^{-iH dt}:
///  - order 1: per-term exponentials in fixed order (ZZ left to right,
///    then Z terms, then X terms),
///  - order 2: Strang splitting of the chosen grouping,
///  - order 4: Suzuki recursion S2(p dt)^2 S2((1-4p) dt) S2(p dt)^2
///    with p = 1/(4 - 4^(1/3)).
Circuit trotter_step(const PauliSumHamiltonian& h, double dt, int order, TrotterSplit split);

struct EvolutionCircuit {
    TrotterPlan plan;
    PauliSumHamiltonian hamiltonian;
    Circuit circuit;
    double t = 0.0;
    int steps = 0;  // full steps; a shorter final step may follow them
};

/// U(t) as round(t/dt) repetitions of the step circuit; when t is not a
/// multiple of dt within 1e-9 a partial step covers the remainder.
EvolutionCircuit evolution_circuit(const PauliSumHamiltonian& h, double t, const TrotterPlan& plan);

/// Streaming equivalent of apply(evolution_circuit(...).circuit, s) (or
/// of its inverse) that never materializes the full gate list. The gate
/// sequence, and therefore the floating-point result, is identical.
void apply_trotter_evolution(const PauliSumHamiltonian& h, const TrotterPlan& plan, double t,
                             bool backward, Statevector& s);

/// Dense propagator oracle. Eigendecomposes the Hamiltonian once at
/// construction; evolve() applies V e^{-i Lambda t} V^dag.
class ExactEvolver {
  public:
    explicit ExactEvolver(const PauliSumHamiltonian& h, int oracle_limit = kDefaultOracleLimit);

    const PauliSumHamiltonian& hamiltonian() const { return h_; }
    Statevector evolve(double t, const Statevector& s) const;
    /// Evolves qubits 1..n of a wider state (extra low-order qubits ride
    /// along untouched, e.g. the protocol ancilla).
    Statevector evolve_system(double t, const Statevector& s) const;
    /// Lowest eigenvector; ties broken by the lowest eigenvalue index.
    Statevector ground_state() const;
    double ground_energy() const;
    const Eigen::VectorXd& eigenvalues() const { return evals_; }

  private:
    PauliSumHamiltonian h_;
    Eigen::VectorXd evals_;
    Eigen::MatrixXcd evecs_;
};

/// Convenience wrapper; builds a fresh ExactEvolver per call.
Statevector exact_evolution(const PauliSumHamiltonian& h, double t, const Statevector& s,
                            int oracle_limit = kDefaultOracleLimit);

/// exp(-i t H) for Hermitian H via eigendecomposition.
Eigen::MatrixXcd propagator(const Eigen::MatrixXcd& hermitian, double t);

}  // namespace otoc
