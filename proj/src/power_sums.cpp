#include "qudiag/power_sums.hpp"

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

const BernoulliTable& shared_bernoulli() {
    static const BernoulliTable table;
    return table;
}

}  // namespace

Residue power_sum_direct(std::uint64_t j, unsigned a, PrimeModulus p, unsigned m) {
    if (a < 1) {
        throw std::invalid_argument("power_sum_direct: exponent must be >= 1");
    }
    Residue acc(0, p, m);
    for (std::uint64_t k = 1; k <= j; ++k) {
        acc = acc + Residue(k, p, m).pow(a);
    }
    return acc;
}

Residue power_sum_faulhaber(std::uint64_t j, unsigned a, PrimeModulus p, unsigned m) {
    if (a < 1) {
        throw std::invalid_argument("power_sum_faulhaber: exponent must be >= 1");
    }
    if (a >= p.value() - 1) {
        throw CaseNotApplicableError(
            "power_sum_faulhaber: requires a <= p-2 (got a = " + std::to_string(a) +
            ", p = " + std::to_string(p.value()) + "); use interpolation instead");
    }

    const BernoulliTable& bernoulli = shared_bernoulli();
    const BigInt big_l = bernoulli.denominator_lcm(a);
    const std::uint64_t pm_u64 = prime_power(p.value(), m);
    const BigInt pm(pm_u64);

    // L*(a+1)*Sum(j,a) = sum_{k=0}^{a} (-1)^k C(a+1,k) (L B_k) j^{a+1-k},
    // an integer identity once the denominators are cleared.
    BigInt scaled = 0;
    for (unsigned k = 0; k <= a; ++k) {
        const BigRational lb = BigRational(big_l) * bernoulli.at(k);
        const BigInt lbk = boost::multiprecision::numerator(lb);  // denominator is 1
        const BigInt power =
            boost::multiprecision::powm(BigInt(j % pm_u64), a + 1 - k, pm);
        BigInt term = binomial(a + 1, k) * lbk % pm;
        term = BigInt(term * power) % pm;
        if (k % 2 == 0) {
            scaled += term;
        } else {
            scaled -= term;
        }
    }
    scaled %= pm;
    if (scaled < 0) scaled += pm;

    const std::uint64_t l_mod = static_cast<std::uint64_t>(big_l % pm);
    const std::uint64_t normalizer = detail::mulmod_u64(l_mod, (a + 1) % pm_u64, pm_u64);
    const Residue inv = unit_inverse(Residue(normalizer, p, m));
    return Residue(static_cast<std::uint64_t>(scaled), p, m) * inv;
}

}  // namespace qudiag
