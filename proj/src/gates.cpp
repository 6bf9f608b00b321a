#include "qudiag/gates.hpp"

#include <map>

namespace qudiag {

namespace {

struct LetterGate {
    unsigned qudits;
    unsigned denominator_exponent_over_p;  // extra powers of 2 for S/T/CS
    bool p2_only;
};

const LetterGate* letter_gate(const std::string& name) {
    static const std::map<std::string, LetterGate> catalog = {
        {"Z", {1, 0, false}},   {"S", {1, 1, true}},  {"T", {1, 2, true}},
        {"CZ", {2, 0, false}},  {"CS", {2, 1, true}}, {"CCZ", {3, 0, false}},
    };
    const auto it = catalog.find(name);
    return it == catalog.end() ? nullptr : &it->second;
}

FunctionTable letter_gate_table(const NamedGate& gate, PrimeModulus p) {
    const LetterGate* entry = letter_gate(gate.name);
    if (entry == nullptr) {
        throw std::invalid_argument("unknown gate name: " + gate.name);
    }
    if (entry->p2_only && p.value() != 2) {
        throw std::invalid_argument("gate " + gate.name +
                                    " is only defined for p = 2");
    }
    const unsigned n = entry->qudits;
    const unsigned m = 1 + entry->denominator_exponent_over_p;
    return monomial_gate_table(p, m, Monomial(std::vector<std::uint32_t>(n, 1)));
}

}  // namespace

FunctionTable monomial_gate_table(PrimeModulus p, unsigned m, const Monomial& a) {
    if (a.is_zero()) {
        throw std::invalid_argument("monomial gate: exponent vector is zero");
    }
    if (m < 1) {
        throw std::invalid_argument("monomial gate: precision must be >= 1");
    }
    return PhasePolynomial::from_terms(p, a.num_vars(), m, {{a, 1}})
        .to_function_table();
}

unsigned gate_qudits(const GateName& gate) {
    return std::visit(
        [](const auto& g) -> unsigned {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, NamedGate>) {
                const LetterGate* entry = letter_gate(g.name);
                if (entry == nullptr) {
                    throw std::invalid_argument("unknown gate name: " + g.name);
                }
                return entry->qudits;
            } else if constexpr (std::is_same_v<T, MonomialGate>) {
                return static_cast<unsigned>(g.a.size());
            } else {
                return 1;
            }
        },
        gate);
}

FunctionTable gate_table(const GateName& gate, PrimeModulus p) {
    return std::visit(
        [&](const auto& g) -> FunctionTable {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, NamedGate>) {
                return letter_gate_table(g, p);
            } else if constexpr (std::is_same_v<T, MonomialGate>) {
                return monomial_gate_table(p, g.m, Monomial(g.a));
            } else {
                if (g.k >= p.value()) {
                    throw std::invalid_argument(
                        "phase gate: state index must be in [0, p-1]");
                }
                if (g.m < 1) {
                    throw std::invalid_argument(
                        "phase gate: precision must be >= 1");
                }
                FunctionTable table = FunctionTable::zero(p, 1);
                table.set(g.k, PhaseFraction(
                                   BigInt(1),
                                   BigInt(prime_power(p.value(), g.m))));
                return table;
            }
        },
        gate);
}

HierarchyLevel level_of_named(const GateName& gate, PrimeModulus p) {
    const FunctionTable table = gate_table(gate, p);
    const HierarchyLevel closed =
        level_closed_form(PhasePolynomial::from_function_table(table));
    const HierarchyLevel oracle = level_recursive_oracle(table);
    if (closed != oracle) {
        throw std::logic_error("level_of_named: classifiers disagree on " +
                               closed.str() + " vs " + oracle.str());
    }
    return closed;
}

}  // namespace qudiag
