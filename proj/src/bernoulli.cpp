#include "qudiag/bernoulli.hpp"

namespace qudiag {

namespace {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

}  // namespace

BernoulliTable::BernoulliTable() { entries_.push_back(BigRational(1)); }

BigRational BernoulliTable::at(unsigned k) const {
    std::lock_guard<std::mutex> lock(mutex_);
    extend(k);
    return entries_[k];
}

BigInt BernoulliTable::denominator_lcm(unsigned max_index) const {
    std::lock_guard<std::mutex> lock(mutex_);
    extend(max_index);
    BigInt l = 1;
    for (unsigned k = 0; k <= max_index; ++k) {
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(entries_[k]));
    }
    return l;
}

void BernoulliTable::extend(unsigned k) const {
    // sum_{i=0}^{n} C(n+1, i) B_i = 0 for n >= 1, which pins down B_n from
    // the earlier entries.
    while (entries_.size() <= k) {
        const unsigned n = static_cast<unsigned>(entries_.size());
        BigRational acc = 0;
        for (unsigned i = 0; i < n; ++i) {
            acc += BigRational(binomial(n + 1, i)) * entries_[i];
        }
        entries_.push_back(-acc / BigRational(n + 1));
    }
}

}  // namespace qudiag
