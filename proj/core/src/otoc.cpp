#include "otoc/otoc.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>

namespace otoc {

std::string to_string(OtocMethod m) {
    return m == OtocMethod::interferometric ? "interf" : "direct";
}

OtocMethod method_from_string(const std::string& name) {
    if (name == "interf") return OtocMethod::interferometric;
    if (name == "direct") return OtocMethod::direct;
    throw std::invalid_argument("unknown method '" + name + "' (expected interf or direct)");
}

std::string to_string(EvolutionSpec::Kind k) {
    return k == EvolutionSpec::Kind::trotter ? "trotter" : "exact";
}

EvolutionSpec::Kind evolution_from_string(const std::string& name) {
    if (name == "trotter") return EvolutionSpec::Kind::trotter;
    if (name == "exact") return EvolutionSpec::Kind::exact;
    throw std::invalid_argument("unknown evolution '" + name + "' (expected trotter or exact)");
}

namespace {

void check_config(const ButterflyConfig& cfg, int width) {
    if (cfg.n != width)
        throw std::invalid_argument("butterfly config size differs from state/circuit width");
    if (cfg.i < 1 || cfg.i > cfg.n || cfg.j < 1 || cfg.j > cfg.n)
        throw std::invalid_argument("butterfly sites must lie in 1..n");
}

// Forward/backward evolution applied to the system qubits of a state
// that may carry the ancilla as an extra low-order qubit.
using SystemEvolver = std::function<void(bool backward, Statevector&)>;

Statevector with_ancilla(const Statevector& psi) {
    std::vector<Complex> amps(psi.amplitudes().size() * 2, Complex{});
    for (std::size_t k = 0; k < psi.amplitudes().size(); ++k)
        amps[2 * k] = psi.amplitude(k);
    return Statevector::from_amplitudes(psi.width() + 1, std::move(amps));
}

double interferometric_impl(const Statevector& psi, const ButterflyConfig& cfg,
                            const SystemEvolver& evolve) {
    check_config(cfg, psi.width());
    const int ancilla = cfg.n + 1;
    Statevector s = with_ancilla(psi);

    Circuit v_gate(ancilla);
    v_gate.append(Gate::x(cfg.j));

    apply_in_place(Gate::h(ancilla), s);
    apply_in_place(Gate::controlled(ancilla, v_gate, /*on_one=*/false), s);
    evolve(false, s);
    apply_in_place(Gate::x(cfg.i), s);
    evolve(true, s);
    apply_in_place(Gate::controlled(ancilla, v_gate, /*on_one=*/true), s);

    return expect_pauli(s, PauliString::single_site(ancilla, ancilla, PauliLetter::X)).value;
}

Complex direct_impl(const Statevector& psi, const ButterflyConfig& cfg,
                    const SystemEvolver& evolve) {
    check_config(cfg, psi.width());
    const Gate w = Gate::x(cfg.i);
    const Gate v = Gate::x(cfg.j);

    // phi1 = U+ X_i U X_j |psi>
    Statevector phi1 = psi;
    apply_in_place(v, phi1);
    evolve(false, phi1);
    apply_in_place(w, phi1);
    evolve(true, phi1);

    // phi2 = X_j U+ X_i U |psi>
    Statevector phi2 = psi;
    evolve(false, phi2);
    apply_in_place(w, phi2);
    evolve(true, phi2);
    apply_in_place(v, phi2);

    Complex overlap{};
    for (std::uint64_t k = 0; k < phi1.dim(); ++k)
        overlap += std::conj(phi2.amplitude(k)) * phi1.amplitude(k);
    return overlap;
}

SystemEvolver circuit_evolver(const Circuit& forward, int state_width) {
    auto fwd = std::make_shared<Circuit>(widened(forward, state_width));
    auto bwd = std::make_shared<Circuit>(invert(*fwd));
    return [fwd, bwd](bool backward, Statevector& s) {
        apply_in_place(backward ? *bwd : *fwd, s);
    };
}

SystemEvolver trotter_evolver(const PauliSumHamiltonian& h, const TrotterPlan& plan, double t) {
    return [&h, plan, t](bool backward, Statevector& s) {
        apply_trotter_evolution(h, plan, t, backward, s);
    };
}

SystemEvolver exact_evolver_fn(const ExactEvolver& evolver, double t) {
    return [&evolver, t](bool backward, Statevector& s) {
        s = evolver.evolve_system(backward ? -t : t, s);
    };
}

OtocPoint make_point(double t, double reF) {
    const double C = 2.0 * (1.0 - reF);
    if (reF < -1.0 - 1e-9 || reF > 1.0 + 1e-9 || C < -1e-9 || C > 4.0 + 1e-9)
        throw std::runtime_error("OTOC value out of the unitary range at t=" + std::to_string(t));
    return {t, reF, C};
}

}  // namespace

Circuit interferometric_circuit(const ButterflyConfig& cfg, const Circuit& forward) {
    check_config(cfg, forward.width());
    const int width = cfg.n + 1;
    const int ancilla = width;

    Circuit v_gate(width);
    v_gate.append(Gate::x(cfg.j));

    Circuit c(width);
    c.append(Gate::h(ancilla));
    c.append(Gate::controlled(ancilla, v_gate, /*on_one=*/false));
    c.append(widened(forward, width));
    c.append(Gate::x(cfg.i));
    c.append(widened(invert(forward), width));
    c.append(Gate::controlled(ancilla, v_gate, /*on_one=*/true));
    return c;
}

double interferometric_reF(const Statevector& psi, const ButterflyConfig& cfg,
                           const Circuit& forward) {
    check_config(cfg, psi.width());
    if (forward.width() != cfg.n)
        throw std::invalid_argument("forward circuit width differs from the system size");
    const Circuit protocol = interferometric_circuit(cfg, forward);
    Statevector s = with_ancilla(psi);
    apply_in_place(protocol, s);
    return expect_pauli(s, PauliString::single_site(cfg.n + 1, cfg.n + 1, PauliLetter::X)).value;
}

double interferometric_reF(const Statevector& psi, const ButterflyConfig& cfg,
                           const EvolutionCircuit& U) {
    return interferometric_reF(psi, cfg, U.circuit);
}

double interferometric_reF(const Statevector& psi, const ButterflyConfig& cfg,
                           const ExactEvolver& evolver, double t) {
    return interferometric_impl(psi, cfg, exact_evolver_fn(evolver, t));
}

double interferometric_reF_sampled(const Statevector& psi, const ButterflyConfig& cfg,
                                   const Circuit& forward, int shots, std::mt19937_64& rng) {
    check_config(cfg, psi.width());
    const Circuit protocol = interferometric_circuit(cfg, forward);
    Statevector s = with_ancilla(psi);
    apply_in_place(protocol, s);
    return sample_expectation(s, PauliString::single_site(cfg.n + 1, cfg.n + 1, PauliLetter::X),
                              shots, rng);
}

Complex direct_F(const Statevector& psi, const ButterflyConfig& cfg, const Circuit& forward) {
    if (forward.width() != psi.width())
        throw std::invalid_argument("forward circuit width differs from the state width");
    return direct_impl(psi, cfg, circuit_evolver(forward, psi.width()));
}

Complex direct_F(const Statevector& psi, const ButterflyConfig& cfg, const ExactEvolver& evolver,
                 double t) {
    return direct_impl(psi, cfg, exact_evolver_fn(evolver, t));
}

double direct_reF(const Statevector& psi, const ButterflyConfig& cfg, const Circuit& forward) {
    return direct_F(psi, cfg, forward).real();
}

double direct_reF(const Statevector& psi, const ButterflyConfig& cfg, const ExactEvolver& evolver,
                  double t) {
    return direct_F(psi, cfg, evolver, t).real();
}

namespace {

void check_times(const std::vector<double>& times) {
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (times[k] < 0) throw std::invalid_argument("OTOC times must be nonnegative");
        if (k > 0 && times[k] <= times[k - 1])
            throw std::invalid_argument("OTOC times must be strictly increasing");
    }
}

OtocSeries evaluate_series(const Statevector& psi, const ButterflyConfig& cfg,
                           const std::vector<double>& times, OtocMethod method,
                           const EvolutionSpec& evolution, std::string initial_state,
                           const std::function<SystemEvolver(double)>& evolver_at) {
    check_config(cfg, psi.width());
    check_times(times);
    OtocSeries series;
    series.config = cfg;
    series.times = times;
    series.method = method;
    series.evolution = evolution;
    series.initial_state = std::move(initial_state);
    series.points.reserve(times.size());
    for (double t : times) {
        const SystemEvolver evolve = evolver_at(t);
        const double reF = (method == OtocMethod::interferometric)
                               ? interferometric_impl(psi, cfg, evolve)
                               : direct_impl(psi, cfg, evolve).real();
        series.points.push_back(make_point(t, reF));
    }
    return series;
}

}  // namespace

OtocSeries commutator_series(const Statevector& psi, const ButterflyConfig& cfg,
                             const PauliSumHamiltonian& h, const EvolutionSpec& evolution,
                             const std::vector<double>& times, OtocMethod method,
                             std::string initial_state) {
    if (h.n() != cfg.n)
        throw std::invalid_argument("Hamiltonian size differs from the butterfly config");
    if (evolution.kind == EvolutionSpec::Kind::exact) {
        const ExactEvolver evolver(h);
        return evaluate_series(psi, cfg, times, method, evolution, std::move(initial_state),
                               [&](double t) { return exact_evolver_fn(evolver, t); });
    }
    return evaluate_series(psi, cfg, times, method, evolution, std::move(initial_state),
                           [&](double t) { return trotter_evolver(h, evolution.plan, t); });
}

OtocSeries commutator_series(const Statevector& psi, const ButterflyConfig& cfg,
                             const ExactEvolver& evolver, const std::vector<double>& times,
                             OtocMethod method, std::string initial_state) {
    if (evolver.hamiltonian().n() != cfg.n)
        throw std::invalid_argument("Hamiltonian size differs from the butterfly config");
    EvolutionSpec spec;
    spec.kind = EvolutionSpec::Kind::exact;
    return evaluate_series(psi, cfg, times, method, spec, std::move(initial_state),
                           [&](double t) { return exact_evolver_fn(evolver, t); });
}

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string series_csv(const OtocSeries& series) {
    std::string out = "t,reF,C\n";
    for (const auto& p : series.points)
        out += fmt17(p.t) + "," + fmt17(p.reF) + "," + fmt17(p.C) + "\n";
    return out;
}

std::string series_json(const OtocSeries& series) {
    nlohmann::json doc;
    doc["i"] = series.config.i;
    doc["j"] = series.config.j;
    doc["n"] = series.config.n;
    doc["method"] = to_string(series.method);
    doc["evolution"]["kind"] = to_string(series.evolution.kind);
    if (series.evolution.kind == EvolutionSpec::Kind::trotter) {
        doc["evolution"]["order"] = series.evolution.plan.order;
        doc["evolution"]["dt"] = series.evolution.plan.dt;
        doc["evolution"]["split"] = to_string(series.evolution.plan.split);
    }
    doc["initial_state"] = series.initial_state;
    auto points = nlohmann::json::array();
    for (const auto& p : series.points)
        points.push_back({{"t", p.t}, {"reF", p.reF}, {"C", p.C}});
    doc["points"] = std::move(points);
    return doc.dump(2);
}

std::string series_filename(const OtocSeries& series, const std::string& regime,
                            const std::string& extension) {
    return "otoc_i" + std::to_string(series.config.i) + "_j" + std::to_string(series.config.j) +
           "_" + regime + "_" + to_string(series.method) + "." + extension;
}

}  // namespace otoc
