#pragma once

#include <cstdint>

#include "qudiag/bernoulli.hpp"
#include "qudiag/residue.hpp"

namespace qudiag {

// Sum_{k=1}^{j} k^a mod p^m, by direct summation. j = 0 gives 0.
Residue power_sum_direct(std::uint64_t j, unsigned a, PrimeModulus p, unsigned m);

// The same power sum evaluated through Faulhaber's closed form: Bernoulli
// denominators are cleared with their lcm L and the result is recovered by
// multiplying with the inverse of L*(a+1) mod p^m. Requires a <= p-2, which
// keeps p out of every denominator involved; otherwise throws
// CaseNotApplicableError and the caller must fall back to interpolation.
Residue power_sum_faulhaber(std::uint64_t j, unsigned a, PrimeModulus p, unsigned m);

}  // namespace qudiag
