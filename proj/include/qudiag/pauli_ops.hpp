#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qudiag/function_table.hpp"
#include "qudiag/hierarchy.hpp"

namespace qudiag {

// An exact generalized permutation operator on n qudits of dimension p:
//
//     |j>  ->  exp(2*pi*i * phase(j)) |permutation(j)>
//
// with the phase attached to the source basis state. The class is closed
// under products and inverses and contains every translation X(v), every
// diagonal gate (Z(w) included), and all their products, so the whole
// conjugation calculus runs in O(p^n) memory with exact rational phases —
// no dense matrices, no floating point.
class GeneralizedPermutationOp {
  public:
    GeneralizedPermutationOp(std::vector<std::size_t> permutation,
                             FunctionTable phases);

    static GeneralizedPermutationOp identity(PrimeModulus p, unsigned n);

    // Diagonal gate with the given phase table.
    static GeneralizedPermutationOp diagonal(FunctionTable phases);

    // Translation |j> -> |j + v mod p>.
    static GeneralizedPermutationOp pauli_x(PrimeModulus p, unsigned n,
                                            const std::vector<std::uint32_t>& v);

    // Diagonal phases <w, j>/p.
    static GeneralizedPermutationOp pauli_z(PrimeModulus p, unsigned n,
                                            const std::vector<std::uint32_t>& w);

    PrimeModulus prime() const { return phases_.prime(); }
    unsigned qudits() const { return phases_.qudits(); }
    std::size_t dimension() const { return phases_.size(); }
    const std::vector<std::size_t>& permutation() const { return permutation_; }
    const FunctionTable& phases() const { return phases_; }

    GeneralizedPermutationOp inverse() const;

    bool is_diagonal() const;

    // When the permutation is |j> -> |j + v>, returns v.
    std::optional<std::vector<std::uint32_t>> translation_vector() const;

    bool operator==(const GeneralizedPermutationOp& rhs) const {
        return permutation_ == rhs.permutation_ && phases_ == rhs.phases_;
    }

    // Equality after forcing the phase at basis state 0 to zero on both
    // sides: the deterministic representative of U modulo e^{i phi}.
    bool equal_up_to_global_phase(const GeneralizedPermutationOp& rhs) const;

  private:
    std::vector<std::size_t> permutation_;
    FunctionTable phases_;
};

// Exact operator product A*B (first apply B): permutations compose and
// phases add along the way, phase(j) = B.phase(j) + A.phase(B.perm(j)).
GeneralizedPermutationOp compose(const GeneralizedPermutationOp& a,
                                 const GeneralizedPermutationOp& b);

// A Pauli-group element written as exp(2*pi*i*phase) * X(x_part) * Z(z_part).
struct PauliElement {
    std::vector<std::uint32_t> x_part;
    std::vector<std::uint32_t> z_part;
    PhaseFraction phase;
};

// Decides Pauli-group membership: the permutation must be a translation and
// the normalized phases must be linear mod p with denominator dividing p.
// With modulo_phase the leading phase is ignored (membership in
// {e^{i phi}} * P_n, the first hierarchy level); without it the phase must
// lie in the group generated by i for p = 2 and by omega for odd p
// (denominator dividing 4, respectively p).
std::optional<PauliElement> is_pauli(const GeneralizedPermutationOp& op,
                                     bool modulo_phase = false);

// True iff conjugating every generator X(e_i), Z(e_i) lands in
// {e^{i phi}} * P_n.
bool is_clifford(const GeneralizedPermutationOp& op);

// Conjugates the diagonal gate with phase table `table` by the translation
// X(v), entirely at the operator level: builds U, X(v), U^{-1}, multiplies
// them out, checks the product is (diagonal) * X(v), and returns that
// product's phase table indexed by source state. That table sends j to
// theta(j + v) - theta(j), so it must agree with the forward-difference
// route — the two code paths never share arithmetic.
FunctionTable conjugate_diagonal(const FunctionTable& table,
                                 const std::vector<std::uint32_t>& v);

// Hierarchy level computed purely with operator conjugations: level 1 iff
// the operator is Pauli modulo phase, else 1 + the largest level of the
// conjugations by basis translations. Never touches polynomial
// coefficients. Feasibility guard: refuses p^n > 125 with TooLargeError.
HierarchyLevel level_matrix(const FunctionTable& table);

}  // namespace qudiag
