#pragma once

#include <memory>
#include <string>
#include <vector>

namespace otoc {

class Circuit;

enum class GateKind { H, S, Sdag, X, RX, RZ, CNOT, ControlledUnit };

/// One gate. Qubit indices are 1-based; index 1 is the most significant
/// bit of the basis-index convention used by the statevector engine.
struct Gate {
    GateKind kind = GateKind::H;
    int q1 = 0;          // target, or control for CNOT / ControlledUnit
    int q2 = 0;          // CNOT target
    double angle = 0.0;  // RX / RZ, radians, not normalized mod 2*pi
    std::shared_ptr<const Circuit> inner;  // ControlledUnit body
    bool control_on_one = true;            // ControlledUnit polarity

    Gate() = default;
    Gate(GateKind k, int target, int second = 0, double theta = 0.0)
        : kind(k), q1(target), q2(second), angle(theta) {}

    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate s(int q) { return {GateKind::S, q}; }
    static Gate sdag(int q) { return {GateKind::Sdag, q}; }
    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate rx(double angle, int q) { return {GateKind::RX, q, 0, angle}; }
    static Gate rz(double angle, int q) { return {GateKind::RZ, q, 0, angle}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target}; }
    /// Apply `body` when qubit `control` is |1> (on_one) or |0> (on_zero);
    /// the body must not touch the control qubit.
    static Gate controlled(int control, Circuit body, bool on_one = true);

    Gate adjoint() const;
    /// Qubits the gate acts on, control and inner support included.
    std::vector<int> support() const;

    bool operator==(const Gate& other) const;
};

/// Ordered gate list over a fixed number of qubits. Gates are applied
/// front to back; the empty circuit is the identity.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int width);
    Circuit(int width, std::vector<Gate> gates);

    int width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    void append(Gate g);
    void append(const Circuit& other);  // same width

    bool operator==(const Circuit& other) const;

  private:
    void validate(const Gate& g) const;

    int width_ = 0;
    std::vector<Gate> gates_;
};

struct DepthReport {
    std::size_t gate_count = 0;  // top-level gates, a ControlledUnit counts once
    std::size_t cnot_count = 0;  // recursive, inner CNOTs included
    std::size_t depth = 0;       // layers of concurrently applicable gates
};

/// Gates of `a` followed by gates of `b` (apply `a` first).
Circuit compose(const Circuit& a, const Circuit& b);

/// Adjoint circuit: gate order reversed, each gate replaced by its adjoint.
Circuit invert(const Circuit& c);

/// Greedy layering: each gate lands on the earliest layer after every
/// frontier of its support qubits.
DepthReport depth_report(const Circuit& c);

/// Same gates on a wider register; qubit indices are unchanged.
Circuit widened(const Circuit& c, int width);

/// Line-oriented text form, one gate per line: `H 1`, `CNOT 9 4`,
/// `RX -0.002 9`, `CTRL 10 on1 {` ... `}`.
std::string format_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text, int width);

}  // namespace otoc
