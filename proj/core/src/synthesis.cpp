#include "otoc/synthesis.hpp"

#include <stdexcept>

namespace otoc {

namespace {

int site_of_bit(int n, int j) { return n - j - 1; }

// tau_j with tau^dag X tau = sigma_j: H for Z, diag(1,-i) for Y.
bool tau_gate(PauliLetter letter, int site, Gate& out) {
    switch (letter) {
        case PauliLetter::Z: out = Gate::h(site); return true;
        case PauliLetter::Y: out = Gate::sdag(site); return true;
        default: return false;
    }
}

}  // namespace

StringMask mask_of(const PauliString& sigma) {
    if (sigma.is_identity())
        throw std::invalid_argument("cannot synthesize the identity string");
    const int n = sigma.size();
    StringMask mask;
    for (int site = 1; site < n; ++site) {
        if (sigma.letter(site) != PauliLetter::I) {
            const int j = n - site - 1;
            mask.x |= std::uint64_t(1) << j;
            mask.m = std::max(mask.m, j);
        }
    }
    if (sigma.letter(n) != PauliLetter::I)
        mask.cls = (mask.x == 0) ? PermClass::trivial : PermClass::even;
    else
        mask.cls = PermClass::odd;
    return mask;
}

PermutationNetwork permutation_network(std::uint64_t x, PermClass cls, int n) {
    PermutationNetwork net;
    net.cls = cls;
    if (cls == PermClass::trivial) {
        if (x != 0) throw std::invalid_argument("trivial class requires x = 0");
        return net;
    }
    if (x == 0) throw std::invalid_argument("even/odd class requires x != 0");
    if (x >> (n - 1)) throw std::invalid_argument("x has bits beyond site 1");

    std::vector<Gate> core;
    for (int site = 1; site < n; ++site) {
        const int j = n - site - 1;
        if (x & (std::uint64_t(1) << j)) core.push_back(Gate::cnot(n, site));
    }
    if (cls == PermClass::even) {
        net.cnots = std::move(core);
        return net;
    }
    int m = 0;
    for (int j = 0; j <= n - 2; ++j)
        if (x & (std::uint64_t(1) << j)) m = j;
    const int wrap_site = site_of_bit(n, m);
    net.cnots.push_back(Gate::cnot(wrap_site, n));
    net.cnots.insert(net.cnots.end(), core.begin(), core.end());
    net.cnots.push_back(Gate::cnot(wrap_site, n));
    return net;
}

SynthesizedExponential synthesize_exponential(const PauliString& sigma, double theta) {
    const StringMask mask = mask_of(sigma);
    const int n = sigma.size();

    std::vector<Gate> tau;
    for (int site = 1; site <= n; ++site) {
        Gate g;
        if (tau_gate(sigma.letter(site), site, g)) tau.push_back(g);
    }
    const auto net = permutation_network(mask.x, mask.cls, n);

    Circuit circuit(n);
    for (const auto& g : tau) circuit.append(g);
    for (const auto& g : net.cnots) circuit.append(g);
    // e^{-i phi X} = RX(2 phi); the string coefficient folds into the angle.
    circuit.append(Gate::rx(2.0 * theta * sigma.coeff, n));
    for (auto it = net.cnots.rbegin(); it != net.cnots.rend(); ++it) circuit.append(*it);
    for (auto it = tau.rbegin(); it != tau.rend(); ++it) circuit.append(it->adjoint());

    return {sigma, theta, std::move(circuit)};
}

}  // namespace otoc
