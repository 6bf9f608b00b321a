#pragma once

#include <cstdint>
#include <vector>

#include "qudiag/rational.hpp"
#include "qudiag/residue.hpp"

namespace qudiag {

// The raw phase list of a diagonal gate: one PhaseFraction per basis state of
// n qudits of dimension p, in row-major order with the last index fastest
// (state |j_1 ... j_n> lives at index ((j_1*p + j_2)*p + ...) + j_n).
class FunctionTable {
  public:
    FunctionTable(PrimeModulus p, unsigned n, std::vector<PhaseFraction> values);

    // All-zero table.
    static FunctionTable zero(PrimeModulus p, unsigned n);

    PrimeModulus prime() const { return p_; }
    unsigned qudits() const { return n_; }
    std::size_t size() const { return values_.size(); }

    const PhaseFraction& at(std::size_t index) const { return values_.at(index); }
    const PhaseFraction& at(const std::vector<std::uint32_t>& j) const {
        return values_.at(index_of(j));
    }
    void set(std::size_t index, PhaseFraction value) { values_.at(index) = std::move(value); }
    const std::vector<PhaseFraction>& values() const { return values_; }

    std::size_t index_of(const std::vector<std::uint32_t>& j) const;
    std::vector<std::uint32_t> state_of(std::size_t index) const;

    // Table with the j = 0 entry subtracted from every entry, so the result
    // has value 0 at the all-zero state.
    FunctionTable normalized() const;

    // True when every entry's denominator is a power of p.
    bool all_p_power() const;
    // Largest denominator exponent over all entries; requires all_p_power().
    unsigned max_p_exponent() const;

    // Pointwise sum / negation: the phase tables of a product of diagonal
    // gates and of an inverse gate.
    FunctionTable operator+(const FunctionTable& rhs) const;
    FunctionTable operator-() const;
    FunctionTable scaled(const BigInt& k) const;

    bool operator==(const FunctionTable& rhs) const {
        return p_ == rhs.p_ && n_ == rhs.n_ && values_ == rhs.values_;
    }

  private:
    PrimeModulus p_;
    unsigned n_;
    std::vector<PhaseFraction> values_;
};

// Forward difference with wraparound along basis direction i (0-based):
// output(j) = table(j + e_i mod p) - table(j). This is the phase table,
// indexed by source state, of the conjugation of the gate by X(e_i).
FunctionTable shift_difference(const FunctionTable& table, unsigned direction);

// Same along an arbitrary shift vector v: output(j) = table(j + v) - table(j).
FunctionTable shift_difference_by(const FunctionTable& table,
                                  const std::vector<std::uint32_t>& v);

// Inverts a single-variable backward-difference table: returns theta with
// theta(0) = 0 and theta(j) - theta(j-1) = delta(j) + phi for j >= 1, where
// delta(0) holds the wraparound value theta(0) - theta(p-1). The p equations
// are solvable iff sum_j delta(j) + p*phi = 0 mod 1; otherwise throws
// InconsistentDifferenceError.
FunctionTable integrate_difference(const FunctionTable& delta, const PhaseFraction& phi);

}  // namespace qudiag
