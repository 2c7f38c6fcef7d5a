#include "otoc/pauli.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace otoc {

namespace {
constexpr Complex kI{0.0, 1.0};
}

char to_char(PauliLetter p) {
    switch (p) {
        case PauliLetter::I: return 'I';
        case PauliLetter::X: return 'X';
        case PauliLetter::Y: return 'Y';
        case PauliLetter::Z: return 'Z';
    }
    throw std::logic_error("unreachable Pauli letter");
}

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I': return PauliLetter::I;
        case 'X': return PauliLetter::X;
        case 'Y': return PauliLetter::Y;
        case 'Z': return PauliLetter::Z;
        default: throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
    }
}

Eigen::Matrix2cd letter_matrix(PauliLetter p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case PauliLetter::I: m << 1, 0, 0, 1; break;
        case PauliLetter::X: m << 0, 1, 1, 0; break;
        case PauliLetter::Y: m << 0, -kI, kI, 0; break;
        case PauliLetter::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

PauliString::PauliString(std::vector<PauliLetter> ls, double c) : letters(std::move(ls)), coeff(c) {
    if (letters.empty()) throw std::invalid_argument("PauliString needs at least one site");
    if (!std::isfinite(coeff)) throw std::invalid_argument("PauliString coefficient must be finite");
}

PauliString PauliString::parse(std::string_view word, double coeff) {
    std::vector<PauliLetter> ls;
    ls.reserve(word.size());
    for (char c : word) ls.push_back(letter_from_char(c));
    return PauliString(std::move(ls), coeff);
}

PauliString PauliString::single_site(int n, int site, PauliLetter p, double coeff) {
    if (n < 1) throw std::invalid_argument("PauliString length must be >= 1");
    if (site < 1 || site > n) throw std::invalid_argument("site out of range");
    std::vector<PauliLetter> ls(static_cast<std::size_t>(n), PauliLetter::I);
    ls[static_cast<std::size_t>(site - 1)] = p;
    return PauliString(std::move(ls), coeff);
}

bool PauliString::is_identity() const {
    for (auto l : letters)
        if (l != PauliLetter::I) return false;
    return true;
}

std::string PauliString::word() const {
    std::string w;
    w.reserve(letters.size());
    for (auto l : letters) w.push_back(to_char(l));
    return w;
}

PauliSumHamiltonian::PauliSumHamiltonian(int n, std::vector<PauliString> terms, IsingParams params)
    : n_(n), terms_(std::move(terms)), params_(params) {
    if (n_ < 1) throw std::invalid_argument("Hamiltonian needs n >= 1");
    if (terms_.empty()) throw std::invalid_argument("Hamiltonian needs a non-empty term list");
    for (const auto& t : terms_) {
        if (t.size() != n_) throw std::invalid_argument("Hamiltonian term length differs from n");
    }
}

PauliSumHamiltonian build_ising_hamiltonian(int n, double J, double hZ, double hX) {
    if (n < 2) throw std::invalid_argument("Ising chain needs n >= 2 sites");
    std::vector<PauliString> terms;
    if (J != 0.0) {
        for (int i = 1; i < n; ++i) {
            auto s = PauliString::single_site(n, i, PauliLetter::Z, J);
            s.letters[static_cast<std::size_t>(i)] = PauliLetter::Z;
            terms.push_back(std::move(s));
        }
    }
    if (hZ != 0.0) {
        for (int i = 1; i <= n; ++i)
            terms.push_back(PauliString::single_site(n, i, PauliLetter::Z, hZ));
    }
    if (hX != 0.0) {
        for (int i = 1; i <= n; ++i)
            terms.push_back(PauliString::single_site(n, i, PauliLetter::X, hX));
    }
    if (terms.empty()) throw std::invalid_argument("all Ising couplings are zero");
    return PauliSumHamiltonian(n, std::move(terms), IsingParams{J, hZ, hX});
}

namespace {

void check_oracle_size(int n, int oracle_limit) {
    if (n > oracle_limit)
        throw std::domain_error("dense oracle limited to " + std::to_string(oracle_limit) +
                                " qubits, got " + std::to_string(n));
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliString& s, int oracle_limit) {
    check_oracle_size(s.size(), oracle_limit);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (auto l : s.letters) {
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        const Eigen::Matrix2cd p = letter_matrix(l);
        // Site 1 stays the leftmost factor: kron(m, p).
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                next.block<2, 2>(2 * r, 2 * c) = m(r, c) * p;
        m = std::move(next);
    }
    return s.coeff * m;
}

Eigen::MatrixXcd dense_matrix(const PauliSumHamiltonian& h, int oracle_limit) {
    check_oracle_size(h.n(), oracle_limit);
    const Eigen::Index dim = Eigen::Index(1) << h.n();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : h.terms()) m += dense_matrix(t, oracle_limit);
    return m;
}

bool strings_commute(const PauliString& a, const PauliString& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("strings_commute needs equal-length strings");
    int anticommuting_sites = 0;
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
        const auto la = a.letters[i];
        const auto lb = b.letters[i];
        if (la != PauliLetter::I && lb != PauliLetter::I && la != lb) ++anticommuting_sites;
    }
    return anticommuting_sites % 2 == 0;
}

std::string hamiltonian_to_json(const PauliSumHamiltonian& h) {
    nlohmann::json doc;
    doc["n"] = h.n();
    doc["J"] = h.params().J;
    doc["hZ"] = h.params().hZ;
    doc["hX"] = h.params().hX;

    bool pure_ising = false;
    try {
        const auto rebuilt = build_ising_hamiltonian(h.n(), h.params().J, h.params().hZ, h.params().hX);
        pure_ising = rebuilt.terms() == h.terms();
    } catch (const std::invalid_argument&) {
        pure_ising = false;
    }
    if (!pure_ising) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : h.terms())
            terms.push_back({{"letters", t.word()}, {"coeff", t.coeff}});
        doc["terms"] = std::move(terms);
    }
    return doc.dump(2);
}

PauliSumHamiltonian hamiltonian_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    const int n = doc.at("n").get<int>();
    IsingParams params{doc.value("J", 0.0), doc.value("hZ", 0.0), doc.value("hX", 0.0)};
    if (doc.contains("terms")) {
        std::vector<PauliString> terms;
        for (const auto& t : doc.at("terms"))
            terms.push_back(PauliString::parse(t.at("letters").get<std::string>(),
                                               t.at("coeff").get<double>()));
        return PauliSumHamiltonian(n, std::move(terms), params);
    }
    return build_ising_hamiltonian(n, params.J, params.hZ, params.hX);
}

}  // namespace otoc
