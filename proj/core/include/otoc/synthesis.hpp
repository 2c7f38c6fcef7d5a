#pragma once

#include "otoc/circuit.hpp"
#include "otoc/pauli.hpp"

#include <cstdint>

namespace otoc {

enum class PermClass { even, odd, trivial };

/// Binary word x = (x_{n-2} ... x_0) marking the non-identity sites of a
/// string among sites 1..n-1; bit j corresponds to site n-j-1. The class
/// is `even` when site n is non-identity, `odd` when it is identity, and
/// `trivial` when the string acts on site n alone (x = 0).
struct StringMask {
    std::uint64_t x = 0;
    PermClass cls = PermClass::trivial;
    int m = -1;  // max set bit of x; the odd-class wrapper index
};

StringMask mask_of(const PauliString& sigma);

/// CNOT product conjugating the I/X word of a string onto I^(n-1) (x) X.
/// Self-inverse as a matrix. Even class: each CNOT has control n.
/// Odd class: the even core wrapped by CNOT(n-m-1 -> n) on both sides.
struct PermutationNetwork {
    std::vector<Gate> cnots;
    PermClass cls = PermClass::trivial;
};

PermutationNetwork permutation_network(std::uint64_t x, PermClass cls, int n);

struct SynthesizedExponential {
    PauliString sigma;
    double theta;
    Circuit circuit;
};

/// Circuit realizing e^{-i theta sigma}: basis-change layer (H per Z
/// site, a diag(1,-i) phase gate per Y site), permutation CNOTs, RX(2
/// theta) on qubit n, the mirrored CNOTs, then the adjoint layer. The
/// layers are emitted as a palindrome around the rotation, so inversion
/// flips only the rotation angle. sigma must not be the identity.
SynthesizedExponential synthesize_exponential(const PauliString& sigma, double theta);

}  // namespace otoc
