#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace otoc {

using Complex = std::complex<double>;

/// Single-site Pauli operator (I, X, Y, Z).
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter p);
PauliLetter letter_from_char(char c);

/// Fixed 2x2 matrix of a letter, standard convention Y = [[0,-i],[i,0]].
Eigen::Matrix2cd letter_matrix(PauliLetter p);

/// Weighted Pauli word over n sites. Site 1 is the leftmost Kronecker
/// factor and maps to the most significant bit of a basis index.
struct PauliString {
    std::vector<PauliLetter> letters;
    double coeff = 1.0;

    PauliString() = default;
    PauliString(std::vector<PauliLetter> ls, double c);
    /// Parse a word like "ZZI" (site 1 first).
    static PauliString parse(std::string_view word, double coeff = 1.0);
    /// Identity everywhere except `site` (1-based).
    static PauliString single_site(int n, int site, PauliLetter p, double coeff = 1.0);

    int size() const { return static_cast<int>(letters.size()); }
    bool is_identity() const;
    PauliLetter letter(int site) const { return letters.at(static_cast<std::size_t>(site - 1)); }
    std::string word() const;

    bool operator==(const PauliString& other) const = default;
};

struct IsingParams {
    double J = 0.0;
    double hZ = 0.0;
    double hX = 0.0;

    bool operator==(const IsingParams&) const = default;
};

/// Weighted sum of equal-length Pauli strings plus the chain parameters
/// it was built from. Immutable after construction.
class PauliSumHamiltonian {
  public:
    PauliSumHamiltonian(int n, std::vector<PauliString> terms, IsingParams params = {});

    int n() const { return n_; }
    const std::vector<PauliString>& terms() const { return terms_; }
    const IsingParams& params() const { return params_; }

    bool operator==(const PauliSumHamiltonian&) const = default;

  private:
    int n_;
    std::vector<PauliString> terms_;
    IsingParams params_;
};

/// Open-boundary transverse-field Ising chain,
///   H = J sum Z_i Z_{i+1} + hZ sum Z_i + hX sum X_i.
/// Zero-coefficient term groups are dropped. Requires n >= 2.
PauliSumHamiltonian build_ising_hamiltonian(int n, double J, double hZ, double hX);

inline constexpr int kDefaultOracleLimit = 12;

/// Dense Kronecker realization, coeff * (P_1 (x) ... (x) P_n).
Eigen::MatrixXcd dense_matrix(const PauliString& s, int oracle_limit = kDefaultOracleLimit);
Eigen::MatrixXcd dense_matrix(const PauliSumHamiltonian& h, int oracle_limit = kDefaultOracleLimit);

/// True iff the strings commute: the number of sites where both letters
/// are non-identity and different is even.
bool strings_commute(const PauliString& a, const PauliString& b);

/// JSON document {n, J, hZ, hX} with an explicit term list appended when
/// the terms are not the Ising set implied by the parameters.
std::string hamiltonian_to_json(const PauliSumHamiltonian& h);
PauliSumHamiltonian hamiltonian_from_json(const std::string& doc);

}  // namespace otoc
