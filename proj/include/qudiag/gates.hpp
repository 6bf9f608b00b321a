#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qudiag/hierarchy.hpp"
#include "qudiag/phase_polynomial.hpp"

namespace qudiag {

// Gate named by letter: Z (phase j/p, any p), S (j/4) and T (j/8) for p = 2,
// CZ (j1*j2/p, any p), CS (j1*j2/4, p = 2), CCZ (j1*j2*j3/p, any p). The
// qudit count is implied by the name.
struct NamedGate {
    std::string name;
};

// The monomial gate applying exp(2*pi*i * j1^{a_1}...j_n^{a_n} / p^m).
struct MonomialGate {
    unsigned m = 1;
    std::vector<std::uint32_t> a;
};

// The single-qudit gate multiplying only |k> by exp(2*pi*i / p^m).
struct PhaseGate {
    unsigned k = 0;
    unsigned m = 1;
};

using GateName = std::variant<NamedGate, MonomialGate, PhaseGate>;

// Phase table of the monomial gate exp(2*pi*i * j^a / p^m); the exponent
// vector must be nonzero.
FunctionTable monomial_gate_table(PrimeModulus p, unsigned m, const Monomial& a);

// Number of qudits the gate acts on.
unsigned gate_qudits(const GateName& gate);

// Phase table of the gate at dimension p. Throws std::invalid_argument for
// unknown letter names, letter gates at an unsupported p, out-of-range
// phase-gate index, or an all-zero monomial exponent vector.
FunctionTable gate_table(const GateName& gate, PrimeModulus p);

// Level of a catalog gate, computed by both the closed-form classifier (on
// the interpolated polynomial) and the recursive table oracle. The two must
// agree; a mismatch throws std::logic_error, since it would mean one of the
// classifiers is wrong.
HierarchyLevel level_of_named(const GateName& gate, PrimeModulus p);

}  // namespace qudiag
