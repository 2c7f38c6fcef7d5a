#include "otoc/circuit.hpp"

#include "otoc/statevector.hpp"
#include "otoc/synthesis.hpp"
#include "otoc/trotter.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace otoc;

TEST_CASE("compose keeps identity and order") {
    Circuit c(2);
    c.append(Gate::h(1));
    c.append(Gate::cnot(1, 2));
    CHECK(compose(Circuit(2), c) == c);
    CHECK(compose(c, Circuit(2)) == c);

    Circuit hh(1);
    hh.append(Gate::h(1));
    const auto both = compose(hh, hh);
    const auto u = circuit_unitary(both);
    CHECK(testutil::max_abs(u - Eigen::MatrixXcd::Identity(2, 2)) < 1e-15);
}

TEST_CASE("compose rejects width mismatch") {
    CHECK_THROWS_AS(compose(Circuit(2), Circuit(3)), std::invalid_argument);
}

TEST_CASE("compose is associative on gate lists") {
    std::mt19937_64 rng(3);
    const auto a = testutil::random_circuit(3, 5, rng);
    const auto b = testutil::random_circuit(3, 4, rng);
    const auto c = testutil::random_circuit(3, 6, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("invert basics") {
    CHECK(invert(Circuit(3)) == Circuit(3));

    Circuit rx(3);
    rx.append(Gate::rx(0.7, 3));
    const auto inv = invert(rx);
    REQUIRE(inv.size() == 1);
    CHECK(inv.gates()[0].kind == GateKind::RX);
    CHECK(inv.gates()[0].angle == -0.7);
    CHECK(inv.gates()[0].q1 == 3);
}

TEST_CASE("synthesized ZZ circuit inverts by flipping the rotation sign only") {
    const auto forward = synthesize_exponential(PauliString::parse("ZZ"), 0.4).circuit;
    const auto backward = invert(forward);
    REQUIRE(forward.size() == backward.size());
    for (std::size_t k = 0; k < forward.size(); ++k) {
        const auto& f = forward.gates()[k];
        const auto& b = backward.gates()[k];
        CHECK(f.kind == b.kind);
        CHECK(f.q1 == b.q1);
        CHECK(f.q2 == b.q2);
        if (f.kind == GateKind::RX)
            CHECK(f.angle == -b.angle);
        else
            CHECK(f.angle == b.angle);
    }
}

TEST_CASE("round-trip: compose(c, invert(c)) acts as the identity") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const int width = 2 + static_cast<int>(rng() % 4);  // up to 5 qubits
        const auto c = testutil::random_circuit(width, 50, rng);
        const auto round = compose(c, invert(c));
        const auto psi = testutil::random_state(width, rng);
        const auto out = apply(round, psi);
        CHECK(testutil::state_distance(out, psi) < 1e-12);
    }
}

TEST_CASE("round-trip on basis states at small width") {
    std::mt19937_64 rng(6);
    const auto c = testutil::random_circuit(4, 30, rng);
    const auto round = compose(c, invert(c));
    const auto u = circuit_unitary(round);
    CHECK(testutil::max_abs(u - Eigen::MatrixXcd::Identity(16, 16)) < 1e-12);
}

TEST_CASE("depth accounting") {
    Circuit parallel(2);
    parallel.append(Gate::h(1));
    parallel.append(Gate::h(2));
    auto report = depth_report(parallel);
    CHECK(report.depth == 1);
    CHECK(report.gate_count == 2);
    CHECK(report.cnot_count == 0);

    Circuit chained(2);
    chained.append(Gate::h(1));
    chained.append(Gate::cnot(1, 2));
    report = depth_report(chained);
    CHECK(report.depth == 2);
    CHECK(report.cnot_count == 1);
}

TEST_CASE("fourth-order step is deeper than first-order") {
    const auto h = build_ising_hamiltonian(4, -1, 1, 1);
    const auto first = depth_report(trotter_step(h, 0.1, 1, TrotterSplit::hz_hx));
    const auto fourth = depth_report(trotter_step(h, 0.1, 4, TrotterSplit::hz_hx));
    CHECK(fourth.depth > first.depth);
    CHECK(fourth.gate_count > first.gate_count);
}

TEST_CASE("depth is invariant under a consistent qubit relabeling") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        const int width = 4;
        const auto c = testutil::random_circuit(width, 25, rng);
        std::vector<int> perm{1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        Circuit relabeled(width);
        for (const auto& g : c.gates()) {
            Gate moved = g;
            moved.q1 = perm[static_cast<std::size_t>(g.q1 - 1)];
            if (g.kind == GateKind::CNOT) moved.q2 = perm[static_cast<std::size_t>(g.q2 - 1)];
            relabeled.append(moved);
        }
        CHECK(depth_report(relabeled).depth == depth_report(c).depth);
    }
}

TEST_CASE("ControlledUnit depth uses the full support") {
    Circuit body(3);
    body.append(Gate::x(2));
    Circuit c(3);
    c.append(Gate::controlled(1, body));
    c.append(Gate::h(3));   // disjoint from {1,2}
    c.append(Gate::h(2));   // collides with the controlled body
    const auto report = depth_report(c);
    CHECK(report.depth == 2);
    CHECK(report.gate_count == 3);
}

TEST_CASE("gate validation") {
    Circuit c(2);
    CHECK_THROWS_AS(c.append(Gate::h(3)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::cnot(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::rx(std::nan(""), 1)), std::invalid_argument);
    Circuit body(2);
    body.append(Gate::x(1));
    CHECK_THROWS_AS(Gate::controlled(1, body), std::invalid_argument);
}

TEST_CASE("text format round-trips, nested controls included") {
    Circuit body(3);
    body.append(Gate::x(2));
    body.append(Gate::rz(-0.25, 1));
    Circuit c(3);
    c.append(Gate::h(1));
    c.append(Gate::cnot(3, 2));
    c.append(Gate::rx(-0.002, 3));
    c.append(Gate::sdag(2));
    c.append(Gate::controlled(3, body, false));
    const auto text = format_circuit(c);
    CHECK(parse_circuit(text, 3) == c);

    CHECK_THROWS_AS(parse_circuit("FOO 1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_circuit("CTRL 1 on1 {\nX 2", 2), std::invalid_argument);
}

TEST_CASE("golden text for a synthesized exponential") {
    const auto synth = synthesize_exponential(PauliString::parse("XYZI", 1.0), 0.002);
    const auto text = format_circuit(synth.circuit);
    std::ifstream golden(std::string(OTOC_TEST_DATA_DIR) + "/golden/synth_xyzi.txt");
    REQUIRE(golden.good());
    std::string expected((std::istreambuf_iterator<char>(golden)),
                         std::istreambuf_iterator<char>());
    CHECK(text == expected);
    CHECK(parse_circuit(text, 4) == synth.circuit);
}
