#pragma once

#include <mutex>
#include <vector>

#include "qudiag/rational.hpp"

namespace qudiag {

// Exact Bernoulli numbers B_0, B_1, ... with B_1 = -1/2, computed on demand
// through the defining recurrence and cached. Observably pure; the cache is
// guarded so a shared table can be read from several threads.
class BernoulliTable {
  public:
    BernoulliTable();

    BigRational at(unsigned k) const;

    // lcm of the denominators of B_0..B_max_index. This is the "L" used to
    // clear denominators in Faulhaber's formula.
    BigInt denominator_lcm(unsigned max_index) const;

  private:
    void extend(unsigned k) const;

    mutable std::vector<BigRational> entries_;
    mutable std::mutex mutex_;
};

}  // namespace qudiag
