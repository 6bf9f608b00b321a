#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qudiag/phase_polynomial.hpp"

namespace qudiag {

// Position of a gate in the tower C^1 ⊆ C^2 ⊆ ... of iterated
// Pauli-normalizers, or the marker for gates outside every level (phases
// whose denominators are not powers of p). Level 1 means diagonal Pauli
// times a global phase; the identity and pure global phases sit there too.
class HierarchyLevel {
  public:
    static HierarchyLevel of(unsigned w) {
        if (w < 1) {
            throw std::invalid_argument("HierarchyLevel: levels start at 1");
        }
        HierarchyLevel l;
        l.level_ = w;
        return l;
    }

    static HierarchyLevel not_in_hierarchy() { return HierarchyLevel(); }

    bool in_hierarchy() const { return level_.has_value(); }

    unsigned value() const {
        if (!level_) {
            throw std::logic_error("HierarchyLevel: no level to read");
        }
        return *level_;
    }

    bool operator==(const HierarchyLevel&) const = default;

    std::string str() const {
        return level_ ? std::to_string(*level_) : std::string("not_in_hierarchy");
    }

  private:
    HierarchyLevel() = default;
    std::optional<unsigned> level_;
};

// Closed-form level of a canonical phase polynomial. Each coefficient
// c = sum_t c_t p^t contributes, for every nonzero base-p digit c_t, the
// value (p-1)*(M-t-1) + weight(a): the digit at height t acts at effective
// precision M-t. The level is the maximum contribution; an empty polynomial
// (gate is a global phase) has level 1.
HierarchyLevel level_closed_form(const PhasePolynomial& poly);

// Level computed by definition, without ever reading polynomial
// coefficients: a gate is at level 1 iff its normalized table is linear
// mod p with denominator dividing p (a diagonal Pauli up to phase), and
// otherwise its level is 1 plus the largest level among its conjugations by
// the basis translations X(e_i), whose phase tables are the forward
// differences of the input. Tables with a non-p-power denominator are not
// in any level. Intermediate results are memoized on the normalized table,
// which turns the recursion tree into a small DAG.
HierarchyLevel level_recursive_oracle(const FunctionTable& table);

// One factor U_{m,a}^power of a diagonal-gate decomposition, where U_{m,a}
// applies exp(2*pi*i * j^a / p^m) to |j>.
struct GeneratorTerm {
    unsigned precision = 1;       // m
    Monomial exponents;           // a, nonzero
    std::uint64_t power = 1;      // in [1, p^m)
};

// A diagonal gate written as a product of monomial-gate powers times a
// global phase. Multiplying the terms back (adding their phase functions)
// reproduces the source polynomial exactly.
struct Decomposition {
    std::vector<GeneratorTerm> terms;
    PhaseFraction global_phase;
};

Decomposition decompose(const PhasePolynomial& poly);

// A hierarchy level within a fixed gate geometry.
struct LevelSpec {
    PrimeModulus p;
    unsigned n = 1;
    unsigned w = 1;
};

// One cyclic factor Z_{p^precision} of the group of diagonal gates of level
// <= w modulo global phase, generated by the monomial gate U_{precision, a}.
struct CyclicFactor {
    Monomial exponents;
    unsigned precision = 1;
    std::uint64_t order = 1;  // p^precision
};

struct CyclicFactorization {
    std::vector<CyclicFactor> factors;

    BigInt total_order() const {
        BigInt product = 1;
        for (const auto& f : factors) {
            product *= f.order;
        }
        return product;
    }
};

// Structure of the diagonal gates of level <= w modulo global phase: one
// cyclic factor of order p^{m_{w,a}} for every nonzero monomial a with
// weight(a) <= w and per-variable degree <= p-1, where
// m_{w,a} = floor((w - weight(a)) / (p-1)) + 1. Factors are sorted by
// weight, then by exponent vector with earlier variables first.
CyclicFactorization group_structure(const LevelSpec& spec);

// The generating pairs (m, a) with (p-1)(m-1) + weight(a) = w: the monomial
// gates U_{m,a} of level exactly w, sorted by precision m then by exponent
// vector with earlier variables first.
std::vector<GeneratorTerm> level_generators(const LevelSpec& spec);

struct EnumerateOptions {
    // Keep the polynomials of all gates found (not just the count).
    bool collect_gates = false;
    // Cross-check up to this many of the found gates against the recursive
    // oracle (0 disables the check).
    std::size_t oracle_sample = 0;
};

struct EnumerationResult {
    BigInt count = 0;          // gates with level <= w, modulo global phase
    BigInt predicted = 0;      // product of cyclic factor orders
    bool matches = false;      // count == predicted
    std::size_t oracle_checked = 0;
    bool oracle_agrees = true;
    std::vector<PhasePolynomial> gates;  // filled when collect_gates
};

// Exhaustively enumerates the canonical phase polynomials of level <= w and
// compares the count with the cyclic-group prediction. Candidates are all
// coefficient assignments at the largest relevant precision; refuses more
// than 10^7 of them with TooLargeError.
EnumerationResult enumerate_level(const LevelSpec& spec,
                                  const EnumerateOptions& options = {});

}  // namespace qudiag
