#include "otoc/synthesis.hpp"

#include "otoc/statevector.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <random>

using namespace otoc;
using testutil::dense_cnot;
using testutil::dense_word;
using testutil::expm_pauli;
using testutil::max_abs;

namespace {

Eigen::MatrixXcd dense_network(const PermutationNetwork& net, int n) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& g : net.cnots) p = dense_cnot(n, g.q1, g.q2) * p;
    return p;
}

// The I/X word matching a mask: X on every flagged site and on site n
// for the even class.
std::string word_of_mask(std::uint64_t x, PermClass cls, int n) {
    std::string word(static_cast<std::size_t>(n), 'I');
    for (int site = 1; site < n; ++site)
        if (x & (std::uint64_t(1) << (n - site - 1))) word[static_cast<std::size_t>(site - 1)] = 'X';
    if (cls != PermClass::odd) word[static_cast<std::size_t>(n - 1)] = 'X';
    return word;
}

}  // namespace

TEST_CASE("mask classes") {
    const auto trivial = mask_of(PauliString::parse("IX"));
    CHECK(trivial.x == 0);
    CHECK(trivial.cls == PermClass::trivial);

    const auto even = mask_of(PauliString::parse("XX"));
    CHECK(even.x == 1);
    CHECK(even.cls == PermClass::even);

    const auto odd = mask_of(PauliString::parse("XI"));
    CHECK(odd.x == 1);
    CHECK(odd.cls == PermClass::odd);
    CHECK(odd.m == 0);

    CHECK_THROWS_AS(mask_of(PauliString::parse("III")), std::invalid_argument);
}

TEST_CASE("mask site/bit convention: bit j flags site n-j-1") {
    const auto mask = mask_of(PauliString::parse("YIIZ"));  // sites 1 and 4 act
    CHECK(mask.cls == PermClass::even);                     // site n occupied
    CHECK(mask.x == 0b100);                                 // site 1 <-> bit n-2 = 2
}

TEST_CASE("permutation networks from the paper's examples") {
    const auto trivial = permutation_network(0, PermClass::trivial, 3);
    CHECK(trivial.cnots.empty());

    const auto even = permutation_network(1, PermClass::even, 2);
    REQUIRE(even.cnots.size() == 1);
    CHECK(even.cnots[0] == Gate::cnot(2, 1));
    const auto p_even = dense_network(even, 2);
    CHECK(max_abs(p_even * dense_word("XX") * p_even - dense_word("IX")) == 0.0);

    const auto odd = permutation_network(1, PermClass::odd, 2);
    REQUIRE(odd.cnots.size() == 3);
    CHECK(odd.cnots[0] == Gate::cnot(1, 2));
    CHECK(odd.cnots[1] == Gate::cnot(2, 1));
    CHECK(odd.cnots[2] == Gate::cnot(1, 2));
    const auto p_odd = dense_network(odd, 2);
    CHECK(max_abs(p_odd * dense_word("XI") * p_odd - dense_word("IX")) == 0.0);
}

TEST_CASE("network conjugation and self-inverse over all I/X words up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        const Eigen::Index dim = Eigen::Index(1) << n;
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
        const std::uint64_t x_max = (n == 1) ? 0 : (std::uint64_t(1) << (n - 1)) - 1;
        for (int cls_int = 0; cls_int < 2; ++cls_int) {
            const PermClass cls = cls_int == 0 ? PermClass::even : PermClass::odd;
            for (std::uint64_t x = 0; x <= x_max; ++x) {
                if (x == 0 && cls == PermClass::odd) continue;  // no such word
                const PermClass effective = (x == 0) ? PermClass::trivial : cls;
                const auto net = permutation_network(x, effective, n);
                const auto p = dense_network(net, n);
                CHECK(max_abs(p * p - id) == 0.0);
                const auto word = dense_word(word_of_mask(x, effective, n));
                const std::string target(std::string(static_cast<std::size_t>(n - 1), 'I') + "X");
                CHECK(max_abs(p * word * p - dense_word(target)) == 0.0);
            }
        }
    }
}

TEST_CASE("even-class networks keep qubit n as the control everywhere") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto sigma = testutil::random_string(n, rng);
        sigma.letters[static_cast<std::size_t>(n - 1)] = PauliLetter::X;  // force even class
        const auto mask = mask_of(sigma);
        if (mask.cls != PermClass::even) continue;
        for (const auto& g : permutation_network(mask.x, mask.cls, n).cnots)
            CHECK(g.q1 == n);
    }
}

TEST_CASE("zero angle acts as the identity") {
    const auto synth = synthesize_exponential(PauliString::parse("Z"), 0.0);
    const auto u = circuit_unitary(synth.circuit);
    CHECK(max_abs(u - Eigen::MatrixXcd::Identity(2, 2)) < 1e-15);
}

TEST_CASE("ZZ exponential equals the closed-form diagonal") {
    const auto synth = synthesize_exponential(PauliString::parse("ZZ"), 0.4);
    const auto u = circuit_unitary(synth.circuit);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    const Complex minus = std::exp(Complex{0, -0.4}), plus = std::exp(Complex{0, 0.4});
    expected.diagonal() << minus, plus, plus, minus;
    CHECK(max_abs(u - expected) < 1e-15);
}

TEST_CASE("XYZ exponential matches the dense oracle") {
    const auto synth = synthesize_exponential(PauliString::parse("XYZ"), 0.17);
    const auto u = circuit_unitary(synth.circuit);
    CHECK(testutil::spectral_distance(u, expm_pauli("XYZ", 1.0, 0.17)) < 1e-12);
}

TEST_CASE("identity string is rejected") {
    CHECK_THROWS_AS(synthesize_exponential(PauliString::parse("II"), 0.1),
                    std::invalid_argument);
}

TEST_CASE("exhaustive equivalence for n <= 3 and sampled equivalence at n in {4,5}") {
    const double angles[] = {0.1, 0.7, -1.3};
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t words = (std::uint64_t(1) << (2 * n)) - 1;
        for (std::uint64_t code = 1; code <= words; ++code) {
            std::vector<PauliLetter> letters(static_cast<std::size_t>(n));
            for (int q = 0; q < n; ++q)
                letters[static_cast<std::size_t>(q)] =
                    static_cast<PauliLetter>((code >> (2 * q)) & 3);
            const PauliString sigma(std::move(letters), 1.0);
            for (double theta : angles) {
                const auto u = circuit_unitary(synthesize_exponential(sigma, theta).circuit);
                CHECK(testutil::spectral_distance(u, expm_pauli(sigma.word(), 1.0, theta)) <
                      1e-12);
            }
        }
    }

    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> theta_dist(-2.0, 2.0);
    std::uniform_real_distribution<double> coeff_dist(-2.0, 2.0);
    for (int n = 4; n <= 5; ++n) {
        for (int rep = 0; rep < 200; ++rep) {
            auto sigma = testutil::random_string(n, rng);
            sigma.coeff = coeff_dist(rng);
            const double theta = theta_dist(rng);
            const auto u = circuit_unitary(synthesize_exponential(sigma, theta).circuit);
            CHECK(testutil::spectral_distance(u, expm_pauli(sigma.word(), sigma.coeff, theta)) <
                  1e-12);
        }
    }
}

TEST_CASE("extending an even-class string by identity keeps the CNOT pattern") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto sigma = testutil::random_string(n, rng);
        sigma.letters[static_cast<std::size_t>(n - 1)] =
            static_cast<PauliLetter>(1 + rng() % 3);  // non-identity at site n
        auto extended = sigma;
        extended.letters.push_back(PauliLetter::I);

        auto count_gates = [](const Circuit& c) {
            std::map<GateKind, int> counts;
            std::multiset<std::pair<int, int>> cnots;
            for (const auto& g : c.gates()) {
                counts[g.kind]++;
                if (g.kind == GateKind::CNOT) cnots.insert({g.q1, g.q2});
            }
            return std::make_pair(counts, cnots);
        };
        const auto base = count_gates(synthesize_exponential(sigma, 0.3).circuit);
        const auto wide = count_gates(synthesize_exponential(extended, 0.3).circuit);

        // One rotation either way.
        CHECK(base.first.at(GateKind::RX) == 1);
        CHECK(wide.first.at(GateKind::RX) == 1);
        // Every CNOT(n -> s) reappears as CNOT(n+1 -> s).
        for (const auto& [control, target] : base.second) {
            CHECK(control == n);
            CHECK(wide.second.count({n + 1, target}) >= 1);
        }
    }
}

TEST_CASE("inversion flips only the rotation angle; basis layers mirror as adjoints") {
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto sigma = testutil::random_string(n, rng);
        const auto forward = synthesize_exponential(sigma, 0.9).circuit;
        const auto backward = invert(forward);
        REQUIRE(forward.size() == backward.size());
        for (std::size_t k = 0; k < forward.size(); ++k) {
            const auto& f = forward.gates()[k];
            const auto& b = backward.gates()[k];
            CHECK(f.kind == b.kind);
            CHECK(f.q1 == b.q1);
            CHECK(f.q2 == b.q2);
            if (f.kind == GateKind::RX)
                CHECK(b.angle == -f.angle);
            else
                CHECK(b.angle == f.angle);
            // Palindromic layout: the mirrored slot holds the adjoint.
            const auto& mirrored = forward.gates()[forward.size() - 1 - k];
            if (f.kind == GateKind::S) CHECK(mirrored.kind == GateKind::Sdag);
            if (f.kind == GateKind::Sdag) CHECK(mirrored.kind == GateKind::S);
            if (f.kind == GateKind::H) CHECK(mirrored.kind == GateKind::H);
        }
    }
}
