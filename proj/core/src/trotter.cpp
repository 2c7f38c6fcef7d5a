#include "otoc/trotter.hpp"

#include "otoc/synthesis.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace otoc {

std::string to_string(TrotterSplit split) {
    return split == TrotterSplit::hz_hx ? "hzhx" : "term";
}

TrotterSplit split_from_string(const std::string& name) {
    if (name == "hzhx") return TrotterSplit::hz_hx;
    if (name == "term") return TrotterSplit::per_term;
    throw std::invalid_argument("unknown split '" + name + "' (expected hzhx or term)");
}

namespace {

bool is_diagonal(const PauliString& s) {
    for (auto l : s.letters)
        if (l == PauliLetter::X || l == PauliLetter::Y) return false;
    return true;
}

// Term order is fixed by the Hamiltonian builder (ZZ, then Z, then X);
// the hz-hx split regroups by diagonality without reordering.
struct TermGroups {
    std::vector<const PauliString*> diagonal;
    std::vector<const PauliString*> offdiagonal;
};

TermGroups group_terms(const PauliSumHamiltonian& h) {
    TermGroups groups;
    for (const auto& t : h.terms())
        (is_diagonal(t) ? groups.diagonal : groups.offdiagonal).push_back(&t);
    return groups;
}

void emit_term(Circuit& c, const PauliString& term, double theta) {
    c.append(synthesize_exponential(term, theta).circuit);
}

template <typename It>
void emit_terms(Circuit& c, It begin, It end, double theta) {
    for (It it = begin; it != end; ++it) emit_term(c, **it, theta);
}

void emit_order1(Circuit& c, const PauliSumHamiltonian& h, double dt, TrotterSplit split) {
    if (split == TrotterSplit::per_term) {
        for (const auto& t : h.terms()) emit_term(c, t, dt);
        return;
    }
    const auto groups = group_terms(h);
    emit_terms(c, groups.diagonal.begin(), groups.diagonal.end(), dt);
    emit_terms(c, groups.offdiagonal.begin(), groups.offdiagonal.end(), dt);
}

void emit_order2(Circuit& c, const PauliSumHamiltonian& h, double dt, TrotterSplit split) {
    if (split == TrotterSplit::per_term) {
        for (const auto& t : h.terms()) emit_term(c, t, dt / 2);
        for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it)
            emit_term(c, *it, dt / 2);
        return;
    }
    // Palindromic emission: the off-diagonal full step runs as mirrored
    // half-steps, so the whole step inverts by flipping rotation signs.
    const auto groups = group_terms(h);
    emit_terms(c, groups.diagonal.begin(), groups.diagonal.end(), dt / 2);
    emit_terms(c, groups.offdiagonal.begin(), groups.offdiagonal.end(), dt / 2);
    emit_terms(c, groups.offdiagonal.rbegin(), groups.offdiagonal.rend(), dt / 2);
    emit_terms(c, groups.diagonal.rbegin(), groups.diagonal.rend(), dt / 2);
}

void emit_step(Circuit& c, const PauliSumHamiltonian& h, double dt, int order,
               TrotterSplit split) {
    switch (order) {
        case 1:
            emit_order1(c, h, dt, split);
            return;
        case 2:
            emit_order2(c, h, dt, split);
            return;
        case 4: {
            const double p = 1.0 / (4.0 - std::cbrt(4.0));
            emit_order2(c, h, p * dt, split);
            emit_order2(c, h, p * dt, split);
            emit_order2(c, h, (1.0 - 4.0 * p) * dt, split);
            emit_order2(c, h, p * dt, split);
            emit_order2(c, h, p * dt, split);
            return;
        }
        default:
            throw std::invalid_argument("Trotter order must be 1, 2 or 4, got " +
                                        std::to_string(order));
    }
}

struct StepSchedule {
    int full_steps = 0;
    double remainder = 0.0;  // 0 when t is a multiple of dt
};

StepSchedule schedule(double t, double dt) {
    if (t < 0) throw std::invalid_argument("evolution time must be nonnegative");
    if (!(dt > 0) || !std::isfinite(dt))
        throw std::invalid_argument("Trotter step dt must be positive");
    StepSchedule s;
    const double ratio = t / dt;
    const auto rounded = static_cast<long long>(std::llround(ratio));
    if (std::abs(t - static_cast<double>(rounded) * dt) < 1e-9) {
        s.full_steps = static_cast<int>(rounded);
        return s;
    }
    s.full_steps = static_cast<int>(std::floor(ratio));
    s.remainder = t - s.full_steps * dt;
    if (s.remainder < 1e-12) s.remainder = 0.0;
    return s;
}

}  // namespace

Circuit trotter_step(const PauliSumHamiltonian& h, double dt, int order, TrotterSplit split) {
    if (!(dt > 0) || !std::isfinite(dt))
        throw std::invalid_argument("Trotter step dt must be positive");
    Circuit c(h.n());
    emit_step(c, h, dt, order, split);
    return c;
}

EvolutionCircuit evolution_circuit(const PauliSumHamiltonian& h, double t,
                                   const TrotterPlan& plan) {
    const auto sched = schedule(t, plan.dt);
    Circuit circuit(h.n());
    if (sched.full_steps > 0) {
        const Circuit step = trotter_step(h, plan.dt, plan.order, plan.split);
        for (int k = 0; k < sched.full_steps; ++k) circuit.append(step);
    }
    if (sched.remainder > 0)
        circuit.append(trotter_step(h, sched.remainder, plan.order, plan.split));
    return {plan, h, std::move(circuit), t, sched.full_steps};
}

void apply_trotter_evolution(const PauliSumHamiltonian& h, const TrotterPlan& plan, double t,
                             bool backward, Statevector& s) {
    if (s.width() < h.n())
        throw std::invalid_argument("statevector narrower than the Hamiltonian system");
    const auto sched = schedule(t, plan.dt);
    const auto build = [&](double dt) {
        Circuit step = trotter_step(h, dt, plan.order, plan.split);
        return s.width() == h.n() ? step : widened(step, s.width());
    };
    if (!backward) {
        if (sched.full_steps > 0) {
            const Circuit step = build(plan.dt);
            for (int k = 0; k < sched.full_steps; ++k) apply_in_place(step, s);
        }
        if (sched.remainder > 0) apply_in_place(build(sched.remainder), s);
        return;
    }
    if (sched.remainder > 0) apply_in_place(invert(build(sched.remainder)), s);
    if (sched.full_steps > 0) {
        const Circuit inverse_step = invert(build(plan.dt));
        for (int k = 0; k < sched.full_steps; ++k) apply_in_place(inverse_step, s);
    }
}

ExactEvolver::ExactEvolver(const PauliSumHamiltonian& h, int oracle_limit) : h_(h) {
    const Eigen::MatrixXcd dense = dense_matrix(h, oracle_limit);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hamiltonian eigendecomposition failed");
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
}

Statevector ExactEvolver::evolve(double t, const Statevector& s) const {
    if (s.width() != h_.n())
        throw std::invalid_argument("statevector width differs from Hamiltonian size");
    return evolve_system(t, s);
}

Statevector ExactEvolver::evolve_system(double t, const Statevector& s) const {
    const int extra = s.width() - h_.n();
    if (extra < 0)
        throw std::invalid_argument("statevector narrower than the Hamiltonian system");
    const Eigen::Index sys_dim = evals_.size();
    const Eigen::Index cols = Eigen::Index(1) << extra;
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    // Basis index = (system index << extra) | ancilla index, so the
    // amplitudes form a row-major (2^n x 2^extra) block.
    Eigen::Map<const RowMajor> block(s.amplitudes().data(), sys_dim, cols);

    Eigen::VectorXcd phases(sys_dim);
    for (Eigen::Index k = 0; k < sys_dim; ++k) {
        const double arg = -evals_(k) * t;
        phases(k) = Complex(std::cos(arg), std::sin(arg));
    }
    RowMajor evolved = evecs_ * (phases.asDiagonal() * (evecs_.adjoint() * block));

    std::vector<Complex> out(static_cast<std::size_t>(sys_dim * cols));
    Eigen::Map<RowMajor>(out.data(), sys_dim, cols) = evolved;
    return Statevector::from_amplitudes(s.width(), std::move(out));
}

Statevector ExactEvolver::ground_state() const {
    const Eigen::Index dim = evals_.size();
    std::vector<Complex> amps(static_cast<std::size_t>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) amps[static_cast<std::size_t>(k)] = evecs_(k, 0);
    return Statevector::from_amplitudes(h_.n(), std::move(amps));
}

double ExactEvolver::ground_energy() const { return evals_(0); }

Statevector exact_evolution(const PauliSumHamiltonian& h, double t, const Statevector& s,
                            int oracle_limit) {
    return ExactEvolver(h, oracle_limit).evolve(t, s);
}

Eigen::MatrixXcd propagator(const Eigen::MatrixXcd& hermitian, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed in propagator");
    Eigen::VectorXcd phases(solver.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        const double arg = -solver.eigenvalues()(k) * t;
        phases(k) = Complex(std::cos(arg), std::sin(arg));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace otoc
