// Generalized-permutation-operator algebra: products, inverses, Pauli and
// Clifford recognition, and the operator-level conjugation oracle that
// cross-checks the table-difference route.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "qudiag/errors.hpp"
#include "qudiag/function_table.hpp"
#include "qudiag/gates.hpp"
#include "qudiag/hierarchy.hpp"
#include "qudiag/pauli_ops.hpp"
#include "test_support.hpp"

using namespace qudiag;

namespace {

PhaseFraction frac(std::int64_t num, std::int64_t den) {
    return PhaseFraction(BigInt(num), BigInt(den));
}

GeneralizedPermutationOp random_op(std::mt19937_64& rng, PrimeModulus p, unsigned n) {
    FunctionTable phases = testing::random_table(rng, p, n, 2);
    const std::size_t dim = phases.size();
    std::vector<std::size_t> perm(dim);
    for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return GeneralizedPermutationOp(std::move(perm), std::move(phases));
}

}  // namespace

TEST_CASE("translations and diagonal phases multiply like X and Z") {
    const PrimeModulus p2(2);
    const auto x = GeneralizedPermutationOp::pauli_x(p2, 1, {1});
    CHECK(compose(x, x) == GeneralizedPermutationOp::identity(p2, 1));

    // Source-indexed phases: in Z*X the phase hits after the flip, in X*Z
    // before it. Both orders are translations by 1 with phase j/2 read at
    // different ends.
    const auto z = GeneralizedPermutationOp::pauli_z(p2, 1, {1});
    const auto zx = compose(z, x);
    CHECK(zx.permutation() == std::vector<std::size_t>{1, 0});
    CHECK(zx.phases().values() == std::vector<PhaseFraction>{frac(1, 2), frac(0, 1)});
    const auto xz = compose(x, z);
    CHECK(xz.permutation() == std::vector<std::size_t>{1, 0});
    CHECK(xz.phases().values() == std::vector<PhaseFraction>{frac(0, 1), frac(1, 2)});

    // Two translations add their vectors.
    const PrimeModulus p3(3);
    const auto x1 = GeneralizedPermutationOp::pauli_x(p3, 2, {1, 0});
    const auto x2 = GeneralizedPermutationOp::pauli_x(p3, 2, {0, 1});
    const auto both = compose(x1, x2);
    CHECK(both.translation_vector() == std::vector<std::uint32_t>{1, 1});
    CHECK(both.phases() == FunctionTable::zero(p3, 2));

    CHECK_THROWS_AS(compose(x, GeneralizedPermutationOp::identity(p3, 1)),
                    ModulusMismatchError);
}

TEST_CASE("operator inverses cancel and products associate") {
    std::mt19937_64 rng(20240825);
    for (const std::uint64_t p : {2, 3, 5}) {
        const PrimeModulus pm(p);
        const unsigned n = p == 2 ? 2 : 1;
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_op(rng, pm, n);
            const auto b = random_op(rng, pm, n);
            const auto c = random_op(rng, pm, n);
            CHECK(compose(a, a.inverse()) == GeneralizedPermutationOp::identity(pm, n));
            CHECK(compose(a.inverse(), a) == GeneralizedPermutationOp::identity(pm, n));
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
    }
}

TEST_CASE("constructor rejects malformed permutations") {
    const FunctionTable zero = FunctionTable::zero(PrimeModulus(2), 1);
    CHECK_THROWS_AS(GeneralizedPermutationOp({0, 0}, zero), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPermutationOp({0, 2}, zero), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPermutationOp({0, 1, 2}, zero), std::invalid_argument);
}

TEST_CASE("Z(w) X(v) equals omega^<v,w> X(v) Z(w)") {
    std::mt19937_64 rng(20240826);
    for (const std::uint64_t p : {2, 3, 5}) {
        const PrimeModulus pm(p);
        const unsigned n = 2;
        std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(p - 1));
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::uint32_t> v = {dist(rng), dist(rng)};
            std::vector<std::uint32_t> w = {dist(rng), dist(rng)};
            const auto x = GeneralizedPermutationOp::pauli_x(pm, n, v);
            const auto z = GeneralizedPermutationOp::pauli_z(pm, n, w);
            const std::int64_t inner =
                static_cast<std::int64_t>((std::uint64_t{v[0]} * w[0] + std::uint64_t{v[1]} * w[1]) % p);
            FunctionTable phase_table = FunctionTable::zero(pm, n);
            for (std::size_t idx = 0; idx < phase_table.size(); ++idx) {
                phase_table.set(idx, frac(inner, static_cast<std::int64_t>(p)));
            }
            const auto scalar = GeneralizedPermutationOp::diagonal(phase_table);
            CHECK(compose(z, x) == compose(scalar, compose(x, z)));
        }
    }
}

TEST_CASE("Pauli recognition extracts the X and Z parts") {
    const PrimeModulus p2(2);
    const PrimeModulus p3(3);
    {
        const auto res = is_pauli(GeneralizedPermutationOp::pauli_z(p2, 1, {1}));
        REQUIRE(res.has_value());
        CHECK(res->x_part == std::vector<std::uint32_t>{0});
        CHECK(res->z_part == std::vector<std::uint32_t>{1});
        CHECK(res->phase.is_zero());
    }
    {
        // S has phase j/4: not Pauli even modulo a global phase.
        const auto s = GeneralizedPermutationOp::diagonal(
            gate_table(NamedGate{"S"}, p2));
        CHECK_FALSE(is_pauli(s).has_value());
        CHECK_FALSE(is_pauli(s, true).has_value());
    }
    {
        // omega * X(1,1) at p = 3: strict membership holds, omega generates
        // the allowed phase group.
        FunctionTable phases = FunctionTable::zero(p3, 2);
        for (std::size_t idx = 0; idx < phases.size(); ++idx) {
            phases.set(idx, frac(1, 3));
        }
        const auto op = compose(GeneralizedPermutationOp::diagonal(phases),
                                GeneralizedPermutationOp::pauli_x(p3, 2, {1, 1}));
        const auto res = is_pauli(op);
        REQUIRE(res.has_value());
        CHECK(res->x_part == std::vector<std::uint32_t>{1, 1});
        CHECK(res->z_part == std::vector<std::uint32_t>{0, 0});
        CHECK(res->phase == frac(1, 3));
    }
    {
        // i * X on a qubit: the qubit Pauli group carries fourth roots.
        FunctionTable phases(p2, 1, {frac(1, 4), frac(1, 4)});
        const auto op = compose(GeneralizedPermutationOp::diagonal(phases),
                                GeneralizedPermutationOp::pauli_x(p2, 1, {1}));
        CHECK(is_pauli(op).has_value());
    }
    {
        // e^{i pi/4} * X is not strictly Pauli, but is Pauli modulo phase.
        FunctionTable phases(p2, 1, {frac(1, 8), frac(1, 8)});
        const auto op = compose(GeneralizedPermutationOp::diagonal(phases),
                                GeneralizedPermutationOp::pauli_x(p2, 1, {1}));
        CHECK_FALSE(is_pauli(op).has_value());
        const auto res = is_pauli(op, true);
        REQUIRE(res.has_value());
        CHECK(res->x_part == std::vector<std::uint32_t>{1});
        CHECK(res->z_part == std::vector<std::uint32_t>{0});
    }
    {
        // X Z on a qubit, with its source-indexed phase [0, 1/2].
        const auto op = compose(GeneralizedPermutationOp::pauli_x(p2, 1, {1}),
                                GeneralizedPermutationOp::pauli_z(p2, 1, {1}));
        const auto res = is_pauli(op);
        REQUIRE(res.has_value());
        CHECK(res->x_part == std::vector<std::uint32_t>{1});
        CHECK(res->z_part == std::vector<std::uint32_t>{1});
        CHECK(res->phase.is_zero());
    }
    // A non-translation permutation is never Pauli.
    const FunctionTable zero3 = FunctionTable::zero(p3, 1);
    CHECK_FALSE(is_pauli(GeneralizedPermutationOp({0, 2, 1}, zero3)).has_value());
}

TEST_CASE("Clifford recognition by conjugating the generators") {
    const PrimeModulus p2(2);
    const PrimeModulus p3(3);
    CHECK(is_clifford(GeneralizedPermutationOp::diagonal(
        gate_table(NamedGate{"S"}, p2))));
    CHECK(is_clifford(GeneralizedPermutationOp::diagonal(
        gate_table(NamedGate{"CZ"}, p2))));
    CHECK(is_clifford(GeneralizedPermutationOp::pauli_x(p3, 1, {1})));
    CHECK_FALSE(is_clifford(GeneralizedPermutationOp::diagonal(
        gate_table(NamedGate{"T"}, p2))));
    CHECK_FALSE(is_clifford(GeneralizedPermutationOp::diagonal(
        gate_table(NamedGate{"CS"}, p2))));
    // The quadratic qutrit gate j^2/3 is Clifford.
    CHECK(is_clifford(GeneralizedPermutationOp::diagonal(
        monomial_gate_table(p3, 1, Monomial({2})))));
    // The deeper-precision qutrit gate j/9 is not.
    CHECK_FALSE(is_clifford(GeneralizedPermutationOp::diagonal(
        monomial_gate_table(p3, 2, Monomial({1})))));
}

TEST_CASE("operator conjugation reproduces the forward difference") {
    {
        const FunctionTable t = gate_table(NamedGate{"T"}, PrimeModulus(2));
        CHECK(conjugate_diagonal(t, {1}).values() ==
              std::vector<PhaseFraction>{frac(1, 8), frac(7, 8)});
    }
    {
        // Conjugating Z by X shifts j to j+1: the difference is constant 1/3.
        const FunctionTable t = gate_table(NamedGate{"Z"}, PrimeModulus(3));
        const FunctionTable d = conjugate_diagonal(t, {1});
        CHECK(d.at(std::size_t{0}) == frac(1, 3));
        CHECK(d.at(1) == frac(1, 3));
        CHECK(d.at(2) == frac(1, 3));  // wraps: 0 - 2/3 = 1/3 mod 1
    }
    {
        const FunctionTable cz = gate_table(NamedGate{"CZ"}, PrimeModulus(2));
        CHECK(conjugate_diagonal(cz, {1, 0}) ==
              gate_table(MonomialGate{1, {0, 1}}, PrimeModulus(2)));
    }
    std::mt19937_64 rng(20240827);
    for (const std::uint64_t p : {2, 3, 5}) {
        const PrimeModulus pm(p);
        const unsigned n = p == 5 ? 1 : 2;
        std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(p - 1));
        for (int trial = 0; trial < 15; ++trial) {
            const FunctionTable t = testing::random_table(rng, pm, n, 2);
            std::vector<std::uint32_t> v(n);
            for (auto& c : v) c = dist(rng);
            CHECK(conjugate_diagonal(t, v) == shift_difference_by(t, v));
        }
    }
}

TEST_CASE("matrix-level classification agrees with the other oracles") {
    const PrimeModulus p2(2);
    CHECK(level_matrix(gate_table(NamedGate{"Z"}, p2)) == HierarchyLevel::of(1));
    CHECK(level_matrix(gate_table(NamedGate{"S"}, p2)) == HierarchyLevel::of(2));
    CHECK(level_matrix(gate_table(NamedGate{"T"}, p2)) == HierarchyLevel::of(3));
    CHECK(level_matrix(gate_table(NamedGate{"CS"}, p2)) == HierarchyLevel::of(3));
    CHECK(level_matrix(gate_table(NamedGate{"CCZ"}, p2)) == HierarchyLevel::of(3));
    CHECK(level_matrix(FunctionTable(p2, 1, {frac(0, 1), frac(1, 3)})) ==
          HierarchyLevel::not_in_hierarchy());

    std::mt19937_64 rng(20240828);
    for (const std::uint64_t p : {2, 3, 5}) {
        for (unsigned n = 1; n <= (p == 2 ? 2u : 1u); ++n) {
            for (unsigned m = 1; m <= 2; ++m) {
                for (int trial = 0; trial < 10; ++trial) {
                    const FunctionTable t =
                        testing::random_table(rng, PrimeModulus(p), n, m);
                    const HierarchyLevel by_matrix = level_matrix(t);
                    CHECK(by_matrix == level_recursive_oracle(t));
                    CHECK(by_matrix ==
                          level_closed_form(PhasePolynomial::from_function_table(t)));
                }
            }
        }
    }

    // 2^7 = 128 basis states exceed the feasibility bound of 125.
    CHECK_THROWS_AS(level_matrix(FunctionTable::zero(p2, 7)), TooLargeError);
    // 5^3 = 125 sits exactly at the bound and is accepted.
    CHECK(level_matrix(FunctionTable::zero(PrimeModulus(5), 3)) == HierarchyLevel::of(1));
}

TEST_CASE("global-phase-insensitive equality normalizes the leading phase") {
    const PrimeModulus p2(2);
    const FunctionTable t = gate_table(NamedGate{"T"}, p2);
    FunctionTable shifted = t;
    for (std::size_t idx = 0; idx < shifted.size(); ++idx) {
        shifted.set(idx, shifted.at(idx) + frac(1, 5));
    }
    const auto a = GeneralizedPermutationOp::diagonal(t);
    const auto b = GeneralizedPermutationOp::diagonal(shifted);
    CHECK_FALSE(a == b);
    CHECK(a.equal_up_to_global_phase(b));
    const auto x = compose(a, GeneralizedPermutationOp::pauli_x(p2, 1, {1}));
    CHECK_FALSE(a.equal_up_to_global_phase(x));
}
