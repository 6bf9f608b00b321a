#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qudiag/function_table.hpp"
#include "qudiag/monomial.hpp"
#include "qudiag/rational.hpp"
#include "qudiag/residue.hpp"

namespace qudiag {

// Canonical phase polynomial of a diagonal gate: the gate applies the phase
//
//     exp(2*pi*i * (sum_a c_a * j_1^{a_1}...j_n^{a_n} / p^M + global_phase))
//
// to basis state |j>, with every j_i read as its integer representative in
// [0, p-1]. Canonical form means: per-variable degree <= p-1, no zero
// coefficients, no constant monomial (absorbed into global_phase), and M
// minimal (some coefficient is a unit mod p, or the polynomial is empty and
// M = 0). Uniqueness: functions Z_p^n -> Z_{p^M} and such polynomials are in
// bijection, so equality of gates is equality of maps.
class PhasePolynomial {
  public:
    // Builds the canonical form of sum c_a j^a / p^{precision} + global.
    // Accepts arbitrary exponents and coefficients; exponents >= p are
    // reduced by re-interpolation of the induced function, never by Fermat
    // reduction (j^p != j as integers in Z_{p^M}).
    static PhasePolynomial from_terms(PrimeModulus p, unsigned n, unsigned precision,
                                      const std::vector<std::pair<Monomial, std::uint64_t>>& terms,
                                      PhaseFraction global_phase = {});

    // Interpolates the canonical polynomial through the table. The value at
    // j = 0 becomes the global phase. Throws NotInHierarchyError when some
    // normalized entry has a denominator that is not a power of p; such a
    // gate has no phase-polynomial form (and sits in no hierarchy level).
    static PhasePolynomial from_function_table(const FunctionTable& table);

    PrimeModulus prime() const { return p_; }
    unsigned qudits() const { return n_; }
    unsigned precision() const { return precision_; }
    const std::map<Monomial, std::uint64_t>& coefficients() const { return coeffs_; }
    const PhaseFraction& global_phase() const { return global_phase_; }
    bool is_empty() const { return coeffs_.empty(); }

    std::uint64_t denominator() const { return prime_power(p_.value(), precision_); }

    PhaseFraction evaluate(const std::vector<std::uint32_t>& j) const;

    FunctionTable to_function_table() const;

    // Same gate, ignoring the global phase.
    bool same_polynomial(const PhasePolynomial& rhs) const {
        return p_ == rhs.p_ && n_ == rhs.n_ && precision_ == rhs.precision_ &&
               coeffs_ == rhs.coeffs_;
    }

    bool operator==(const PhasePolynomial& rhs) const {
        return same_polynomial(rhs) && global_phase_ == rhs.global_phase_;
    }

    // "(j1 + 3*j2^2)/9 + 1/3" style rendering.
    std::string str() const;

  private:
    PhasePolynomial(PrimeModulus p, unsigned n) : p_(p), n_(n) {}

    void canonicalize();

    PrimeModulus p_;
    unsigned n_;
    unsigned precision_ = 0;
    std::map<Monomial, std::uint64_t> coeffs_;
    PhaseFraction global_phase_;
};

// Canonical polynomial of the single-variable difference j^a - (j-1)^a,
// expanded with binomial coefficients and reduced mod p^m. The constant
// (-1)^{a+1} lands in the global phase; the leading term is a*j^{a-1}.
// Requires 1 <= a <= p-1.
PhasePolynomial monomial_difference(unsigned a, PrimeModulus p, unsigned m);

}  // namespace qudiag
