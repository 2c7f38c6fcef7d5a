#include "otoc/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "statevector binary format assumes a little-endian host");

namespace otoc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// 1-based qubit q <-> bit position width - q (qubit 1 is the MSB).
inline int bit_of(int width, int q) { return width - q; }

inline bool masked_out(std::uint64_t index, std::uint64_t cmask, std::uint64_t cval) {
    return (index & cmask) != cval;
}

// Iterates the dim/2 amplitude pairs split by one qubit bit.
template <typename PairOp>
inline void for_each_pair(std::vector<Complex>& a, int bit, std::uint64_t cmask,
                          std::uint64_t cval, PairOp&& op) {
    const std::uint64_t stride = std::uint64_t(1) << bit;
    const std::uint64_t half = a.size() >> 1;
    const std::uint64_t low_mask = stride - 1;
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = ((k & ~low_mask) << 1) | (k & low_mask);
        if (masked_out(i0, cmask, cval)) continue;
        op(a[i0], a[i0 | stride]);
    }
}

void apply_gate(std::vector<Complex>& a, int width, const Gate& g, std::uint64_t cmask,
                std::uint64_t cval) {
    switch (g.kind) {
        case GateKind::H: {
            for_each_pair(a, bit_of(width, g.q1), cmask, cval, [](Complex& a0, Complex& a1) {
                const Complex u = a0, v = a1;
                a0 = (u + v) * kInvSqrt2;
                a1 = (u - v) * kInvSqrt2;
            });
            return;
        }
        case GateKind::X: {
            for_each_pair(a, bit_of(width, g.q1), cmask, cval,
                          [](Complex& a0, Complex& a1) { std::swap(a0, a1); });
            return;
        }
        case GateKind::S: {
            for_each_pair(a, bit_of(width, g.q1), cmask, cval, [](Complex&, Complex& a1) {
                a1 = Complex(-a1.imag(), a1.real());  // *= i
            });
            return;
        }
        case GateKind::Sdag: {
            for_each_pair(a, bit_of(width, g.q1), cmask, cval, [](Complex&, Complex& a1) {
                a1 = Complex(a1.imag(), -a1.real());  // *= -i
            });
            return;
        }
        case GateKind::RX: {
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            for_each_pair(a, bit_of(width, g.q1), cmask, cval, [c, s](Complex& a0, Complex& a1) {
                const Complex u = a0, v = a1;
                a0 = c * u + s * Complex(v.imag(), -v.real());
                a1 = s * Complex(u.imag(), -u.real()) + c * v;
            });
            return;
        }
        case GateKind::RZ: {
            const Complex p0(std::cos(g.angle / 2), -std::sin(g.angle / 2));
            const Complex p1 = std::conj(p0);
            for_each_pair(a, bit_of(width, g.q1), cmask, cval, [p0, p1](Complex& a0, Complex& a1) {
                a0 *= p0;
                a1 *= p1;
            });
            return;
        }
        case GateKind::CNOT: {
            const int cb = bit_of(width, g.q1), tb = bit_of(width, g.q2);
            const std::uint64_t cbit = std::uint64_t(1) << cb;
            const std::uint64_t tbit = std::uint64_t(1) << tb;
            const int lo = std::min(cb, tb), hi = std::max(cb, tb);
            const std::uint64_t low_mask = (std::uint64_t(1) << lo) - 1;
            const std::uint64_t mid_mask = ((std::uint64_t(1) << (hi - 1)) - 1) & ~low_mask;
            const std::uint64_t quarter = a.size() >> 2;
            for (std::uint64_t k = 0; k < quarter; ++k) {
                const std::uint64_t base = ((k & ~(low_mask | mid_mask)) << 2) |
                                           ((k & mid_mask) << 1) | (k & low_mask) | cbit;
                if (masked_out(base, cmask, cval)) continue;
                std::swap(a[base], a[base | tbit]);
            }
            return;
        }
        case GateKind::ControlledUnit: {
            const std::uint64_t bitmask = std::uint64_t(1) << bit_of(width, g.q1);
            const std::uint64_t inner_mask = cmask | bitmask;
            const std::uint64_t inner_val = cval | (g.control_on_one ? bitmask : 0);
            for (const auto& inner : g.inner->gates())
                apply_gate(a, width, inner, inner_mask, inner_val);
            return;
        }
    }
    throw std::logic_error("unreachable gate kind");
}

}  // namespace

std::array<Complex, 2> local_plus_y() { return {Complex{kInvSqrt2, 0}, Complex{0, kInvSqrt2}}; }
std::array<Complex, 2> local_minus_y() { return {Complex{kInvSqrt2, 0}, Complex{0, -kInvSqrt2}}; }

Statevector Statevector::all_zero(int width) {
    if (width < 1) throw std::invalid_argument("statevector width must be >= 1");
    Statevector s;
    s.width_ = width;
    s.amps_.assign(std::uint64_t(1) << width, Complex{});
    s.amps_[0] = 1.0;
    return s;
}

Statevector Statevector::ghz(int width) {
    Statevector s = all_zero(width);
    s.amps_[0] = kInvSqrt2;
    s.amps_[s.amps_.size() - 1] = kInvSqrt2;
    return s;
}

Statevector Statevector::product(const std::vector<std::array<Complex, 2>>& locals) {
    if (locals.empty()) throw std::invalid_argument("product state needs at least one site");
    Statevector s = all_zero(static_cast<int>(locals.size()));
    std::uint64_t filled = 1;
    for (const auto& local : locals) {  // site 1 first keeps it the MSB factor
        for (std::uint64_t b = filled; b-- > 0;) {
            const Complex amp = s.amps_[b];
            s.amps_[2 * b] = amp * local[0];
            s.amps_[2 * b + 1] = amp * local[1];
        }
        filled *= 2;
    }
    const double n = s.norm();
    if (!(std::abs(n - 1.0) < 1e-9))
        throw std::invalid_argument("product state locals are not normalized");
    return s;
}

Statevector Statevector::from_amplitudes(int width, std::vector<Complex> amps) {
    if (width < 1) throw std::invalid_argument("statevector width must be >= 1");
    if (amps.size() != (std::uint64_t(1) << width))
        throw std::invalid_argument("amplitude payload size differs from 2^width");
    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    if (!std::isfinite(norm2) || norm2 <= 0.0)
        throw std::invalid_argument("amplitude payload is not normalizable");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    Statevector s;
    s.width_ = width;
    s.amps_ = std::move(amps);
    return s;
}

double Statevector::norm() const {
    double norm2 = 0.0;
    for (const auto& a : amps_) norm2 += std::norm(a);
    return std::sqrt(norm2);
}

void apply_in_place(const Gate& g, Statevector& s) {
    apply_gate(s.amps_, s.width_, g, 0, 0);
}

void apply_in_place(const Circuit& c, Statevector& s) {
    if (c.width() != s.width())
        throw std::invalid_argument("circuit width differs from statevector width");
    for (const auto& g : c.gates()) apply_in_place(g, s);
}

Statevector apply(const Circuit& c, const Statevector& s) {
    Statevector out = s;
    apply_in_place(c, out);
    return out;
}

Statevector apply(const Gate& g, const Statevector& s) {
    Statevector out = s;
    apply_in_place(g, out);
    return out;
}

ExpectationResult expect_pauli(const Statevector& s, const PauliString& p) {
    if (p.size() != s.width())
        throw std::invalid_argument("observable length differs from statevector width");
    const int width = s.width();
    std::uint64_t flip = 0, ymask = 0, zmask = 0;
    int y_count = 0;
    for (int q = 1; q <= width; ++q) {
        const std::uint64_t bit = std::uint64_t(1) << bit_of(width, q);
        switch (p.letter(q)) {
            case PauliLetter::I: break;
            case PauliLetter::X: flip |= bit; break;
            case PauliLetter::Y:
                flip |= bit;
                ymask |= bit;
                ++y_count;
                break;
            case PauliLetter::Z: zmask |= bit; break;
        }
    }
    static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex y_base = kIPowers[y_count % 4];
    const auto& a = s.amplitudes();
    Complex acc{};
    for (std::uint64_t b = 0; b < a.size(); ++b) {
        const int sign_bits =
            std::popcount(b & zmask) + std::popcount(b & ymask);
        const double sign = (sign_bits % 2 == 0) ? 1.0 : -1.0;
        acc += std::conj(a[b ^ flip]) * (sign * y_base) * a[b];
    }
    acc *= p.coeff;
    if (std::abs(acc.imag()) > 1e-9)
        throw std::runtime_error("expectation of a Hermitian observable came out complex");
    return {acc.real(), p.word()};
}

double sample_expectation(const Statevector& s, const PauliString& p, int shots,
                          std::mt19937_64& rng) {
    if (shots < 1) throw std::invalid_argument("sampling needs shots >= 1");
    if (p.coeff != 1.0)
        throw std::invalid_argument("sampling assumes a +/-1-valued observable (coeff 1)");
    const double value = expect_pauli(s, p).value;
    const double prob = std::clamp((1.0 + value) / 2.0, 0.0, 1.0);
    std::binomial_distribution<int> dist(shots, prob);
    return 2.0 * dist(rng) / shots - 1.0;
}

NormDistance norm_distance(const Statevector& a, const Statevector& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("norm distance needs equal widths");
    double diff2 = 0.0, na2 = 0.0, nb2 = 0.0;
    Complex overlap{};
    for (std::uint64_t k = 0; k < a.dim(); ++k) {
        const Complex va = a.amplitude(k), vb = b.amplitude(k);
        diff2 += std::norm(va - vb);
        na2 += std::norm(va);
        nb2 += std::norm(vb);
        overlap += std::conj(va) * vb;
    }
    NormDistance d;
    d.raw = std::sqrt(diff2);
    d.aligned = std::sqrt(std::max(0.0, na2 + nb2 - 2.0 * std::abs(overlap)));
    return d;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
    const Eigen::Index dim = Eigen::Index(1) << c.width();
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        std::vector<Complex> amps(static_cast<std::size_t>(dim), Complex{});
        amps[static_cast<std::size_t>(col)] = 1.0;
        auto s = Statevector::from_amplitudes(c.width(), std::move(amps));
        apply_in_place(c, s);
        for (Eigen::Index row = 0; row < dim; ++row)
            u(row, col) = s.amplitude(static_cast<std::uint64_t>(row));
    }
    return u;
}

void save_statevector(const Statevector& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    const std::uint32_t width = static_cast<std::uint32_t>(s.width());
    out.write(reinterpret_cast<const char*>(&width), sizeof(width));
    out.write(reinterpret_cast<const char*>(s.amplitudes().data()),
              static_cast<std::streamsize>(s.amplitudes().size() * sizeof(Complex)));
    if (!out) throw std::runtime_error("short write to " + path);
}

Statevector load_statevector(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint32_t width = 0;
    in.read(reinterpret_cast<char*>(&width), sizeof(width));
    if (!in || width < 1 || width > 30) throw std::runtime_error("bad statevector header in " + path);
    std::vector<Complex> amps(std::uint64_t(1) << width);
    in.read(reinterpret_cast<char*>(amps.data()),
            static_cast<std::streamsize>(amps.size() * sizeof(Complex)));
    if (!in) throw std::runtime_error("truncated statevector file " + path);
    return Statevector::from_amplitudes(static_cast<int>(width), std::move(amps));
}

}  // namespace otoc

static_assert(sizeof(otoc::Complex) == 16, "complex<double> layout assumed by binary IO");
