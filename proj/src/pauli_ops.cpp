#include "qudiag/pauli_ops.hpp"

#include <algorithm>
#include <map>

namespace qudiag {

namespace {

std::vector<std::uint32_t> add_states(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b,
                                      std::uint64_t p) {
    std::vector<std::uint32_t> sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum[i] = static_cast<std::uint32_t>((a[i] + b[i]) % p);
    }
    return sum;
}

void check_component_count(const std::vector<std::uint32_t>& v, unsigned n,
                           const char* what) {
    if (v.size() != n) {
        throw std::invalid_argument(std::string(what) +
                                    ": component vector has wrong length");
    }
}

// Reads w from a normalized phase table when it is exactly
// theta(j) = <w, j>/p mod 1; empty otherwise. Deliberately local to this
// translation unit: the operator-level hierarchy code must not share its
// base case with the table-difference classifier.
std::optional<std::vector<std::uint32_t>> linear_form(const FunctionTable& normalized) {
    const std::uint64_t p = normalized.prime().value();
    const unsigned n = normalized.qudits();
    for (std::size_t idx = 0; idx < normalized.size(); ++idx) {
        const BigInt& den = normalized.at(idx).denominator();
        if (den != 1 && den != BigInt(p)) return std::nullopt;
    }
    std::vector<std::uint32_t> w(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(n, 0);
        e[i] = 1;
        const PhaseFraction& v = normalized.at(e);
        if (!v.is_zero()) {
            w[i] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(v.numerator() * BigInt(p) /
                                           v.denominator()) %
                p);
        }
    }
    for (std::size_t idx = 0; idx < normalized.size(); ++idx) {
        const std::vector<std::uint32_t> state = normalized.state_of(idx);
        std::uint64_t acc = 0;
        for (unsigned i = 0; i < n; ++i) {
            acc = (acc + std::uint64_t{w[i]} * state[i]) % p;
        }
        if (normalized.at(idx) != PhaseFraction(BigInt(acc), BigInt(p))) {
            return std::nullopt;
        }
    }
    return w;
}

}  // namespace

GeneralizedPermutationOp::GeneralizedPermutationOp(
    std::vector<std::size_t> permutation, FunctionTable phases)
    : permutation_(std::move(permutation)), phases_(std::move(phases)) {
    if (permutation_.size() != phases_.size()) {
        throw std::invalid_argument(
            "GeneralizedPermutationOp: permutation and phase table disagree on "
            "dimension");
    }
    std::vector<bool> seen(permutation_.size(), false);
    for (std::size_t target : permutation_) {
        if (target >= permutation_.size() || seen[target]) {
            throw std::invalid_argument(
                "GeneralizedPermutationOp: permutation is not a bijection");
        }
        seen[target] = true;
    }
}

GeneralizedPermutationOp GeneralizedPermutationOp::identity(PrimeModulus p,
                                                            unsigned n) {
    return diagonal(FunctionTable::zero(p, n));
}

GeneralizedPermutationOp GeneralizedPermutationOp::diagonal(FunctionTable phases) {
    std::vector<std::size_t> perm(phases.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        perm[j] = j;
    }
    return GeneralizedPermutationOp(std::move(perm), std::move(phases));
}

GeneralizedPermutationOp GeneralizedPermutationOp::pauli_x(
    PrimeModulus p, unsigned n, const std::vector<std::uint32_t>& v) {
    check_component_count(v, n, "pauli_x");
    FunctionTable phases = FunctionTable::zero(p, n);
    std::vector<std::size_t> perm(phases.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        perm[j] = phases.index_of(add_states(phases.state_of(j), v, p.value()));
    }
    return GeneralizedPermutationOp(std::move(perm), std::move(phases));
}

GeneralizedPermutationOp GeneralizedPermutationOp::pauli_z(
    PrimeModulus p, unsigned n, const std::vector<std::uint32_t>& w) {
    check_component_count(w, n, "pauli_z");
    FunctionTable phases = FunctionTable::zero(p, n);
    for (std::size_t j = 0; j < phases.size(); ++j) {
        const std::vector<std::uint32_t> state = phases.state_of(j);
        std::uint64_t acc = 0;
        for (unsigned i = 0; i < n; ++i) {
            acc = (acc + std::uint64_t{w[i]} * state[i]) % p.value();
        }
        phases.set(j, PhaseFraction(BigInt(acc), BigInt(p.value())));
    }
    return diagonal(std::move(phases));
}

GeneralizedPermutationOp GeneralizedPermutationOp::inverse() const {
    std::vector<std::size_t> inverse_perm(permutation_.size());
    for (std::size_t j = 0; j < permutation_.size(); ++j) {
        inverse_perm[permutation_[j]] = j;
    }
    FunctionTable phases = FunctionTable::zero(prime(), qudits());
    for (std::size_t j = 0; j < phases.size(); ++j) {
        phases.set(j, -phases_.at(inverse_perm[j]));
    }
    return GeneralizedPermutationOp(std::move(inverse_perm), std::move(phases));
}

bool GeneralizedPermutationOp::is_diagonal() const {
    for (std::size_t j = 0; j < permutation_.size(); ++j) {
        if (permutation_[j] != j) return false;
    }
    return true;
}

std::optional<std::vector<std::uint32_t>>
GeneralizedPermutationOp::translation_vector() const {
    const std::uint64_t p = prime().value();
    const std::vector<std::uint32_t> v = phases_.state_of(permutation_[0]);
    for (std::size_t j = 0; j < permutation_.size(); ++j) {
        const std::size_t expected =
            phases_.index_of(add_states(phases_.state_of(j), v, p));
        if (permutation_[j] != expected) return std::nullopt;
    }
    return v;
}

bool GeneralizedPermutationOp::equal_up_to_global_phase(
    const GeneralizedPermutationOp& rhs) const {
    return permutation_ == rhs.permutation_ &&
           phases_.normalized() == rhs.phases_.normalized();
}

GeneralizedPermutationOp compose(const GeneralizedPermutationOp& a,
                                 const GeneralizedPermutationOp& b) {
    if (a.prime() != b.prime() || a.qudits() != b.qudits()) {
        throw ModulusMismatchError("compose: operators act on different systems");
    }
    std::vector<std::size_t> perm(a.dimension());
    FunctionTable phases = FunctionTable::zero(a.prime(), a.qudits());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        const std::size_t mid = b.permutation()[j];
        perm[j] = a.permutation()[mid];
        phases.set(j, b.phases().at(j) + a.phases().at(mid));
    }
    return GeneralizedPermutationOp(std::move(perm), std::move(phases));
}

std::optional<PauliElement> is_pauli(const GeneralizedPermutationOp& op,
                                     bool modulo_phase) {
    const auto v = op.translation_vector();
    if (!v) return std::nullopt;
    const FunctionTable normalized = op.phases().normalized();
    const auto w = linear_form(normalized);
    if (!w) return std::nullopt;
    PauliElement element{*v, *w, op.phases().at(std::size_t{0})};
    if (!modulo_phase) {
        const std::uint64_t p = op.prime().value();
        const BigInt allowed = p == 2 ? BigInt(4) : BigInt(p);
        if (allowed % element.phase.denominator() != 0) {
            return std::nullopt;
        }
    }
    return element;
}

bool is_clifford(const GeneralizedPermutationOp& op) {
    const PrimeModulus p = op.prime();
    const unsigned n = op.qudits();
    const GeneralizedPermutationOp inverse = op.inverse();
    for (unsigned i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(n, 0);
        e[i] = 1;
        for (const auto& generator :
             {GeneralizedPermutationOp::pauli_x(p, n, e),
              GeneralizedPermutationOp::pauli_z(p, n, e)}) {
            const GeneralizedPermutationOp conjugated =
                compose(compose(op, generator), inverse);
            if (!is_pauli(conjugated, /*modulo_phase=*/true)) {
                return false;
            }
        }
    }
    return true;
}

FunctionTable conjugate_diagonal(const FunctionTable& table,
                                 const std::vector<std::uint32_t>& v) {
    check_component_count(v, table.qudits(), "conjugate_diagonal");
    const GeneralizedPermutationOp u = GeneralizedPermutationOp::diagonal(table);
    const GeneralizedPermutationOp x =
        GeneralizedPermutationOp::pauli_x(table.prime(), table.qudits(), v);
    const GeneralizedPermutationOp product =
        compose(compose(u, x), u.inverse());
    if (product.permutation() != x.permutation()) {
        throw std::logic_error(
            "conjugate_diagonal: product is not diagonal * X(v)");
    }
    return product.phases();
}

namespace {

using MatrixMemo = std::map<std::vector<PhaseFraction>, unsigned>;

unsigned level_matrix_recurse(const FunctionTable& normalized, MatrixMemo& memo,
                              unsigned depth) {
    if (depth > 512) {
        throw std::logic_error("level_matrix: descent failed to terminate");
    }
    if (auto it = memo.find(normalized.values()); it != memo.end()) {
        return it->second;
    }
    unsigned result;
    if (is_pauli(GeneralizedPermutationOp::diagonal(normalized),
                 /*modulo_phase=*/true)) {
        result = 1;
    } else {
        unsigned deepest = 0;
        for (unsigned i = 0; i < normalized.qudits(); ++i) {
            std::vector<std::uint32_t> e(normalized.qudits(), 0);
            e[i] = 1;
            const FunctionTable conjugated =
                conjugate_diagonal(normalized, e).normalized();
            deepest =
                std::max(deepest, level_matrix_recurse(conjugated, memo, depth + 1));
        }
        result = 1 + deepest;
    }
    memo.emplace(normalized.values(), result);
    return result;
}

}  // namespace

HierarchyLevel level_matrix(const FunctionTable& table) {
    if (table.size() > 125) {
        throw TooLargeError("level_matrix: refuses dimensions above 125");
    }
    const FunctionTable normalized = table.normalized();
    if (!normalized.all_p_power()) {
        return HierarchyLevel::not_in_hierarchy();
    }
    MatrixMemo memo;
    return HierarchyLevel::of(level_matrix_recurse(normalized, memo, 0));
}

}  // namespace qudiag
