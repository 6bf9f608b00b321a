#include <doctest.h>

#include <random>

#include "qudiag/bernoulli.hpp"
#include "qudiag/power_sums.hpp"
#include "test_support.hpp"

using namespace qudiag;

TEST_CASE("PrimeModulus accepts primes and rejects everything else") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 97}) {
        CHECK(PrimeModulus(p).value() == p);
    }
    CHECK(PrimeModulus(::std::uint64_t{1'000'000'007}).value() == 1'000'000'007);
    for (std::uint64_t bad : {0, 1, 4, 6, 9, 91, 1'000'000'006}) {
        CHECK_THROWS_AS(PrimeModulus{bad}, NotPrimeError);
    }
}

TEST_CASE("prime_power computes and guards overflow") {
    CHECK(prime_power(2, 0) == 1);
    CHECK(prime_power(5, 3) == 125);
    CHECK(prime_power(2, 63) == (std::uint64_t{1} << 63));
    CHECK_THROWS_AS(prime_power(2, 64), std::overflow_error);
    CHECK_THROWS_AS(prime_power(1'000'000'007, 3), std::overflow_error);
}

TEST_CASE("Residue ring arithmetic") {
    const PrimeModulus p5(5);
    const Residue a(17, p5, 2);  // 17 mod 25
    const Residue b(13, p5, 2);
    CHECK(a.value() == 17);
    CHECK((a + b).value() == 5);
    CHECK((a - b).value() == 4);
    CHECK((a * b).value() == (17 * 13) % 25);
    CHECK(a.pow(0).value() == 1);
    std::uint64_t repeated = 1;
    for (int i = 0; i < 10; ++i) repeated = repeated * 17 % 25;
    CHECK(a.pow(10).value() == repeated);
    CHECK(a.is_unit());
    CHECK_FALSE(Residue(10, p5, 2).is_unit());

    const Residue other_ring(3, p5, 3);
    CHECK_THROWS_AS((void)(a + other_ring), ModulusMismatchError);
    const Residue other_prime(3, PrimeModulus(3), 2);
    CHECK_THROWS_AS((void)(a * other_prime), ModulusMismatchError);
}

TEST_CASE("unit_inverse: pinned value, Euclid cross-check, error case") {
    const PrimeModulus p5(5);
    CHECK(unit_inverse(Residue(7, p5, 2)).value() == 18);  // 7 * 18 = 126 = 1 mod 25

    std::mt19937_64 rng(20240817);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        const PrimeModulus prime(p);
        for (unsigned m = 1; m <= 5; ++m) {
            const std::uint64_t pm = prime_power(p, m);
            std::uniform_int_distribution<std::uint64_t> dist(0, pm - 1);
            for (int trial = 0; trial < 50; ++trial) {
                std::uint64_t a = dist(rng);
                if (a % p == 0) a = (a + 1) % pm;
                const Residue inv = unit_inverse(Residue(a, prime, m));
                CHECK((Residue(a, prime, m) * inv).value() == 1);
                CHECK(inv.value() == testing::ext_gcd_inverse(a, pm));
            }
        }
    }

    CHECK_THROWS_AS(unit_inverse(Residue(10, p5, 2)), NotAUnitError);
    CHECK_THROWS_AS(unit_inverse(Residue(0, p5, 1)), NotAUnitError);
}

TEST_CASE("Bernoulli numbers: pinned values and vanishing odd entries") {
    const BernoulliTable table;
    CHECK(table.at(0) == BigRational(1));
    CHECK(table.at(1) == BigRational(-1, 2));
    CHECK(table.at(2) == BigRational(1, 6));
    CHECK(table.at(4) == BigRational(-1, 30));
    CHECK(table.at(6) == BigRational(1, 42));
    CHECK(table.at(12) == BigRational(-691, 2730));
    for (unsigned k = 3; k <= 19; k += 2) {
        CHECK(table.at(k) == BigRational(0));
    }
}

TEST_CASE("Bernoulli denominators obey the prime-divisor rule") {
    // von Staudt-Clausen: the denominator of B_{2k} is exactly the product
    // of the primes q with (q-1) | 2k.
    const BernoulliTable table;
    for (unsigned k = 2; k <= 20; k += 2) {
        BigInt expected = 1;
        for (std::uint64_t q = 2; q <= k + 1; ++q) {
            if (detail::is_prime_u64(q) && k % (q - 1) == 0) {
                expected *= q;
            }
        }
        CHECK(boost::multiprecision::denominator(table.at(k)) == expected);
    }
    // Consequence the Faulhaber path relies on: for a <= p-2 no denominator
    // among B_0..B_a is divisible by p, so their lcm is a unit mod p^m.
    for (std::uint64_t p : {3, 5, 7, 11}) {
        const BigInt l = table.denominator_lcm(static_cast<unsigned>(p - 2));
        CHECK(l % p != 0);
    }
}

TEST_CASE("power_sum_direct: pinned values") {
    CHECK(power_sum_direct(4, 2, PrimeModulus(5), 1).value() == 0);   // 30
    CHECK(power_sum_direct(4, 4, PrimeModulus(5), 1).value() == 4);   // 354
    CHECK(power_sum_direct(4, 3, PrimeModulus(7), 2).value() == 2);   // 100
    CHECK(power_sum_direct(0, 3, PrimeModulus(7), 2).value() == 0);
}

TEST_CASE("power sums over a full multiplicative period") {
    // sum_{k=1}^{p-1} k^a is p-1 mod p when (p-1) | a (all terms 1) and
    // 0 mod p otherwise, because the units form a cyclic group.
    for (std::uint64_t p : {2, 3, 5, 7}) {
        const PrimeModulus prime(p);
        for (unsigned a = 1; a <= p - 1; ++a) {
            const std::uint64_t expected = (a == p - 1) ? p - 1 : 0;
            CHECK(power_sum_direct(p - 1, a, prime, 1).value() == expected);
        }
    }
}

TEST_CASE("Faulhaber closed form matches direct summation") {
    for (std::uint64_t p : {3, 5, 7}) {
        const PrimeModulus prime(p);
        for (unsigned m = 1; m <= 3; ++m) {
            for (unsigned a = 1; a + 1 < p; ++a) {
                for (std::uint64_t j = 0; j <= 3 * p; ++j) {
                    CHECK(power_sum_faulhaber(j, a, prime, m) ==
                          power_sum_direct(j, a, prime, m));
                }
            }
        }
    }
}

TEST_CASE("Faulhaber refuses exponents that put p into a denominator") {
    CHECK_THROWS_AS(power_sum_faulhaber(4, 4, PrimeModulus(5), 1),
                    CaseNotApplicableError);
    CHECK_THROWS_AS(power_sum_faulhaber(3, 2, PrimeModulus(3), 2),
                    CaseNotApplicableError);
    CHECK_THROWS_AS(power_sum_faulhaber(1, 1, PrimeModulus(2), 1),
                    CaseNotApplicableError);
}

TEST_CASE("PhaseFraction wraps to [0,1) and orders correctly") {
    const PhaseFraction zero;
    CHECK(zero.is_zero());
    CHECK(PhaseFraction(BigInt(5), BigInt(4)) == PhaseFraction(BigInt(1), BigInt(4)));
    CHECK(PhaseFraction(BigInt(-1), BigInt(4)) == PhaseFraction(BigInt(3), BigInt(4)));
    CHECK(PhaseFraction(BigInt(8), BigInt(4)).is_zero());

    const PhaseFraction third(BigInt(1), BigInt(3));
    const PhaseFraction half(BigInt(1), BigInt(2));
    CHECK((third + third + third).is_zero());
    CHECK(third + half == PhaseFraction(BigInt(5), BigInt(6)));
    CHECK(-third == PhaseFraction(BigInt(2), BigInt(3)));
    CHECK(third - half == PhaseFraction(BigInt(5), BigInt(6)));
    CHECK(third * BigInt(2) == PhaseFraction(BigInt(2), BigInt(3)));
    CHECK(third < half);
    CHECK(third.str() == "1/3");

    CHECK(PhaseFraction(BigInt(3), BigInt(8)).p_power(2));
    CHECK(PhaseFraction(BigInt(3), BigInt(8)).p_exponent(2) == 3);
    CHECK_FALSE(PhaseFraction(BigInt(1), BigInt(6)).p_power(2));
    CHECK(zero.p_power(2));
    CHECK(zero.p_exponent(5) == 0);
}
