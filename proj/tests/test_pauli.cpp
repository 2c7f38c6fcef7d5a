#include "otoc/pauli.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace otoc;
using testutil::dense_word;
using testutil::max_abs;
using testutil::pauli2;

namespace {

std::multiset<std::pair<std::string, double>> term_set(const PauliSumHamiltonian& h) {
    std::multiset<std::pair<std::string, double>> set;
    for (const auto& t : h.terms()) set.insert({t.word(), t.coeff});
    return set;
}

}  // namespace

TEST_CASE("Ising chain n=3 has the eight expected terms") {
    const auto h = build_ising_hamiltonian(3, -1, 1, 1);
    const std::multiset<std::pair<std::string, double>> expected = {
        {"ZZI", -1}, {"IZZ", -1}, {"ZII", 1}, {"IZI", 1}, {"IIZ", 1},
        {"XII", 1},  {"IXI", 1},  {"IIX", 1},
    };
    CHECK(term_set(h) == expected);
    CHECK(h.params().J == -1);
}

TEST_CASE("degenerate couplings keep only the nonzero group") {
    const auto h = build_ising_hamiltonian(2, 0, 0, 1);
    const std::multiset<std::pair<std::string, double>> expected = {{"XI", 1}, {"IX", 1}};
    CHECK(term_set(h) == expected);
}

TEST_CASE("integrable n=9 chain: 17 terms, all pairs commute (2x2 factor oracle)") {
    const auto h = build_ising_hamiltonian(9, -1, 1, 0);
    REQUIRE(h.terms().size() == 17);
    // Oracle: per-site 2x2 products decide commutation; a pair commutes
    // iff the number of anticommuting sites is even.
    for (std::size_t a = 0; a < h.terms().size(); ++a) {
        for (std::size_t b = a + 1; b < h.terms().size(); ++b) {
            int anti = 0;
            for (int site = 1; site <= 9; ++site) {
                const auto ma = pauli2(to_char(h.terms()[a].letter(site)));
                const auto mb = pauli2(to_char(h.terms()[b].letter(site)));
                if (max_abs(ma * mb - mb * ma) > 1e-14) ++anti;
            }
            CHECK(anti % 2 == 0);
            CHECK(strings_commute(h.terms()[a], h.terms()[b]));
        }
    }
}

TEST_CASE("term count formula") {
    CHECK(build_ising_hamiltonian(5, -1, 1, 1).terms().size() == 4 + 5 + 5);
    CHECK(build_ising_hamiltonian(5, -1, 0, 1).terms().size() == 4 + 5);
    CHECK(build_ising_hamiltonian(7, 2, 3, 0).terms().size() == 6 + 7);
}

TEST_CASE("invalid chain sizes are rejected") {
    CHECK_THROWS_AS(build_ising_hamiltonian(1, -1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_ising_hamiltonian(0, -1, 1, 1), std::invalid_argument);
}

TEST_CASE("dense X(x)I by hand") {
    const auto m = dense_matrix(PauliString::parse("XI"));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 2) = expected(2, 0) = expected(1, 3) = expected(3, 1) = 1;
    CHECK(max_abs(m - expected) == 0.0);
}

TEST_CASE("dense identity string scales the identity") {
    const auto m = dense_matrix(PauliString::parse("II", 2.5));
    CHECK(max_abs(m - 2.5 * Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
}

TEST_CASE("dense Ising(2,-1,1,0) is diag(1,1,1,-3)") {
    const auto m = dense_matrix(build_ising_hamiltonian(2, -1, 1, 0));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected.diagonal() << 1, 1, 1, -3;
    CHECK(max_abs(m - expected) < 1e-15);
}

TEST_CASE("dense realization agrees with a test-side Kronecker chain") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            auto s = testutil::random_string(n, rng, true);
            s.coeff = 1.5;
            CHECK(max_abs(dense_matrix(s) - dense_word(s.word(), s.coeff)) < 1e-14);
        }
    }
}

TEST_CASE("oracle limit guards dense realization") {
    std::vector<PauliLetter> letters(13, PauliLetter::Z);
    CHECK_THROWS_AS(dense_matrix(PauliString(letters, 1.0)), std::domain_error);
    CHECK_THROWS_AS(dense_matrix(PauliString(letters, 1.0), 12), std::domain_error);
}

TEST_CASE("commutation examples") {
    CHECK(strings_commute(PauliString::parse("ZZ"), PauliString::parse("ZI")));
    CHECK_FALSE(strings_commute(PauliString::parse("XI"), PauliString::parse("ZI")));
    // Two anticommuting sites give an even count; confirm by 4x4 commutator.
    const auto a = PauliString::parse("XZ");
    const auto b = PauliString::parse("ZX");
    CHECK(strings_commute(a, b));
    const auto da = dense_word("XZ"), db = dense_word("ZX");
    CHECK(max_abs(da * db - db * da) < 1e-14);
}

TEST_CASE("commutation rule matches the dense commutator norm") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 150; ++rep) {
            const auto a = testutil::random_string(n, rng, true);
            const auto b = testutil::random_string(n, rng, true);
            const auto da = dense_matrix(a), db = dense_matrix(b);
            const bool dense_commutes = max_abs(da * db - db * da) < 1e-12;
            CHECK(strings_commute(a, b) == dense_commutes);
        }
    }
}

TEST_CASE("commutation needs equal lengths") {
    CHECK_THROWS_AS(strings_commute(PauliString::parse("XI"), PauliString::parse("X")),
                    std::invalid_argument);
}

TEST_CASE("unit-coefficient strings are Hermitian and square to identity") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto s = testutil::random_string(n, rng, true);
            const auto m = dense_matrix(s);
            CHECK(max_abs(m - m.adjoint()) < 1e-14);
            CHECK(max_abs(m * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())) < 1e-14);
        }
    }
}

TEST_CASE("Hamiltonian dense matrix is Hermitian for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const auto m = dense_matrix(build_ising_hamiltonian(n, -1, 1, 1));
        CHECK(max_abs(m - m.adjoint()) < 1e-13);
    }
}

TEST_CASE("string construction guards") {
    CHECK_THROWS_AS(PauliString(std::vector<PauliLetter>{}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::parse("X", std::nan("")), std::invalid_argument);
    CHECK(PauliString::parse("IIII").is_identity());
    CHECK_FALSE(PauliString::parse("IIXI").is_identity());
}

TEST_CASE("Hamiltonian JSON round-trip") {
    const auto ising = build_ising_hamiltonian(4, -1, 1, 0.5);
    const auto ising_doc = hamiltonian_to_json(ising);
    CHECK(ising_doc.find("terms") == std::string::npos);
    CHECK(hamiltonian_from_json(ising_doc) == ising);

    const PauliSumHamiltonian custom(
        2, {PauliString::parse("XY", 0.25), PauliString::parse("ZZ", -2)}, {0, 0, 0});
    const auto custom_doc = hamiltonian_to_json(custom);
    CHECK(custom_doc.find("terms") != std::string::npos);
    CHECK(hamiltonian_from_json(custom_doc) == custom);
}

TEST_CASE("Hamiltonian constructor rejects mismatched terms") {
    CHECK_THROWS_AS(PauliSumHamiltonian(3, {PauliString::parse("XY")}), std::invalid_argument);
    CHECK_THROWS_AS(PauliSumHamiltonian(2, {}), std::invalid_argument);
}
