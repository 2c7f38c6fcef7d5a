#pragma once

#include "otoc/circuit.hpp"
#include "otoc/pauli.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace otoc {

/// Local 2-level states used by the product-state preparation.
inline std::array<Complex, 2> local_zero() { return {Complex{1, 0}, Complex{0, 0}}; }
inline std::array<Complex, 2> local_one() { return {Complex{0, 0}, Complex{1, 0}}; }
std::array<Complex, 2> local_plus_y();   // (|0> + i|1>)/sqrt(2)
std::array<Complex, 2> local_minus_y();  // (|0> - i|1>)/sqrt(2)

/// Normalized complex amplitude vector over `width` qubits. Qubit 1 is
/// the most significant bit of the basis index.
class Statevector {
  public:
    Statevector() = default;

    static Statevector all_zero(int width);
    static Statevector ghz(int width);
    static Statevector product(const std::vector<std::array<Complex, 2>>& locals);
    /// Normalizes the payload; zero or non-finite payloads are rejected.
    static Statevector from_amplitudes(int width, std::vector<Complex> amps);

    int width() const { return width_; }
    std::uint64_t dim() const { return std::uint64_t(1) << width_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t index) const { return amps_[index]; }
    double norm() const;

    bool operator==(const Statevector& other) const = default;

  private:
    friend void apply_in_place(const Gate& g, Statevector& s);

    int width_ = 0;
    std::vector<Complex> amps_;
};

/// Gate-by-gate application; returns a new state.
Statevector apply(const Circuit& c, const Statevector& s);
Statevector apply(const Gate& g, const Statevector& s);
void apply_in_place(const Circuit& c, Statevector& s);
void apply_in_place(const Gate& g, Statevector& s);

struct ExpectationResult {
    double value = 0.0;
    std::string observable;
};

/// <s| p |s> computed letter-wise from amplitudes, never through the
/// dense matrix. The imaginary residue must stay below 1e-9.
ExpectationResult expect_pauli(const Statevector& s, const PauliString& p);

/// Shot-sampled estimate of a +/-1-valued Pauli expectation: draws
/// Binomial(shots, (1+<p>)/2) outcomes from the exact probability.
double sample_expectation(const Statevector& s, const PauliString& p, int shots,
                          std::mt19937_64& rng);

struct NormDistance {
    double raw = 0.0;      // ||a - b||_2
    double aligned = 0.0;  // after multiplying b by the optimal unit phase
};

NormDistance norm_distance(const Statevector& a, const Statevector& b);

/// Unitary of a circuit, column by column over basis states (engine path;
/// intended for small widths).
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

/// Binary export: 4-byte little-endian width header, then 2^width
/// little-endian complex doubles (re, im).
void save_statevector(const Statevector& s, const std::string& path);
Statevector load_statevector(const std::string& path);

}  // namespace otoc
