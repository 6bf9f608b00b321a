#include "qudiag/hierarchy.hpp"

#include <algorithm>
#include <map>

namespace qudiag {

namespace {

// Enumerates all exponent vectors in [0, p-1]^n, in odometer order.
std::vector<std::vector<std::uint32_t>> all_exponent_vectors(std::uint64_t p, unsigned n) {
    std::vector<std::vector<std::uint32_t>> result;
    if (n == 0) {
        return result;
    }
    std::vector<std::uint32_t> current(n, 0);
    while (true) {
        result.push_back(current);
        unsigned i = n;
        while (i > 0) {
            --i;
            if (current[i] + 1 < p) {
                ++current[i];
                std::fill(current.begin() + i + 1, current.end(), 0);
                break;
            }
            if (i == 0) return result;
        }
    }
}

// Weight ascending, then earlier variables first (descending exponent lex),
// so j1 sorts before j2 among equals.
bool monomial_order(const Monomial& a, const Monomial& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.exponents() > b.exponents();
}

bool divides_p(const BigInt& denominator, std::uint64_t p) {
    return denominator == 1 || denominator == BigInt(p);
}

// True when the normalized table is theta(j) = sum_i w_i j_i / p mod 1 for
// some w in Z_p^n: the phase function of a diagonal Pauli.
bool is_linear_mod_p(const FunctionTable& normalized) {
    const std::uint64_t p = normalized.prime().value();
    const unsigned n = normalized.qudits();
    for (std::size_t idx = 0; idx < normalized.size(); ++idx) {
        if (!divides_p(normalized.at(idx).denominator(), p)) return false;
    }
    std::vector<std::uint64_t> w(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(n, 0);
        e[i] = 1;
        const PhaseFraction& v = normalized.at(e);
        if (!v.is_zero()) {
            w[i] = static_cast<std::uint64_t>(v.numerator() * BigInt(p) /
                                              v.denominator()) %
                   p;
        }
    }
    for (std::size_t idx = 0; idx < normalized.size(); ++idx) {
        const std::vector<std::uint32_t> state = normalized.state_of(idx);
        std::uint64_t acc = 0;
        for (unsigned i = 0; i < n; ++i) {
            acc = (acc + w[i] * state[i]) % p;
        }
        if (normalized.at(idx) != PhaseFraction(BigInt(acc), BigInt(p))) {
            return false;
        }
    }
    return true;
}

using OracleMemo = std::map<std::vector<PhaseFraction>, unsigned>;

unsigned oracle_recurse(const FunctionTable& normalized, OracleMemo& memo,
                        unsigned depth) {
    if (depth > 512) {
        throw std::logic_error(
            "level_recursive_oracle: descent failed to terminate");
    }
    if (auto it = memo.find(normalized.values()); it != memo.end()) {
        return it->second;
    }
    unsigned result;
    if (is_linear_mod_p(normalized)) {
        result = 1;
    } else {
        unsigned deepest = 0;
        for (unsigned i = 0; i < normalized.qudits(); ++i) {
            const FunctionTable diff = shift_difference(normalized, i).normalized();
            deepest = std::max(deepest, oracle_recurse(diff, memo, depth + 1));
        }
        result = 1 + deepest;
    }
    memo.emplace(normalized.values(), result);
    return result;
}

}  // namespace

HierarchyLevel level_closed_form(const PhasePolynomial& poly) {
    const std::uint64_t p = poly.prime().value();
    const unsigned m = poly.precision();
    unsigned best = 1;
    for (const auto& [mono, coeff] : poly.coefficients()) {
        std::uint64_t c = coeff;
        for (unsigned t = 0; c != 0; ++t, c /= p) {
            if (c % p == 0) continue;
            const unsigned contribution =
                static_cast<unsigned>((p - 1) * (m - t - 1)) + mono.weight();
            best = std::max(best, contribution);
        }
    }
    return HierarchyLevel::of(best);
}

HierarchyLevel level_recursive_oracle(const FunctionTable& table) {
    const FunctionTable normalized = table.normalized();
    if (!normalized.all_p_power()) {
        return HierarchyLevel::not_in_hierarchy();
    }
    OracleMemo memo;
    return HierarchyLevel::of(oracle_recurse(normalized, memo, 0));
}

Decomposition decompose(const PhasePolynomial& poly) {
    Decomposition result;
    result.global_phase = poly.global_phase();
    for (const auto& [mono, coeff] : poly.coefficients()) {
        result.terms.push_back(GeneratorTerm{poly.precision(), mono, coeff});
    }
    std::sort(result.terms.begin(), result.terms.end(),
              [](const GeneratorTerm& a, const GeneratorTerm& b) {
                  return monomial_order(a.exponents, b.exponents);
              });
    return result;
}

CyclicFactorization group_structure(const LevelSpec& spec) {
    if (spec.w < 1 || spec.n < 1) {
        throw std::invalid_argument("group_structure: needs level >= 1 and n >= 1");
    }
    const std::uint64_t p = spec.p.value();
    CyclicFactorization result;
    for (auto& exps : all_exponent_vectors(p, spec.n)) {
        Monomial mono(std::move(exps));
        const unsigned wt = mono.weight();
        if (wt < 1 || wt > spec.w) continue;
        const unsigned m =
            static_cast<unsigned>((spec.w - wt) / (p - 1)) + 1;
        result.factors.push_back(
            CyclicFactor{std::move(mono), m, prime_power(p, m)});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const CyclicFactor& a, const CyclicFactor& b) {
                  return monomial_order(a.exponents, b.exponents);
              });
    return result;
}

std::vector<GeneratorTerm> level_generators(const LevelSpec& spec) {
    if (spec.w < 1 || spec.n < 1) {
        throw std::invalid_argument("level_generators: needs level >= 1 and n >= 1");
    }
    const std::uint64_t p = spec.p.value();
    std::vector<GeneratorTerm> result;
    for (unsigned m = 1; (p - 1) * (m - 1) < spec.w; ++m) {
        const unsigned needed =
            spec.w - static_cast<unsigned>((p - 1) * (m - 1));
        if (needed > spec.n * (p - 1)) continue;
        for (auto& exps : all_exponent_vectors(p, spec.n)) {
            Monomial mono(std::move(exps));
            if (mono.weight() == needed) {
                result.push_back(GeneratorTerm{m, std::move(mono), 1});
            }
        }
    }
    std::sort(result.begin(), result.end(),
              [](const GeneratorTerm& a, const GeneratorTerm& b) {
                  if (a.precision != b.precision) return a.precision < b.precision;
                  return a.exponents.exponents() > b.exponents.exponents();
              });
    return result;
}

EnumerationResult enumerate_level(const LevelSpec& spec,
                                  const EnumerateOptions& options) {
    const std::uint64_t p = spec.p.value();
    const CyclicFactorization factorization = group_structure(spec);
    const unsigned m_max = static_cast<unsigned>((spec.w - 1) / (p - 1)) + 1;
    const std::uint64_t pm = prime_power(p, m_max);

    BigInt candidates = 1;
    for (std::size_t i = 0; i < factorization.factors.size(); ++i) {
        candidates *= pm;
        if (candidates > 10'000'000) {
            throw TooLargeError(
                "enumerate_level: more than 10^7 candidate polynomials");
        }
    }

    EnumerationResult result;
    result.predicted = factorization.total_order();

    const std::uint64_t predicted_u64 =
        static_cast<std::uint64_t>(result.predicted);
    const std::uint64_t stride =
        options.oracle_sample == 0
            ? 0
            : std::max<std::uint64_t>(1, predicted_u64 / options.oracle_sample);

    std::vector<std::uint64_t> coeffs(factorization.factors.size(), 0);
    std::uint64_t found = 0;
    while (true) {
        std::vector<std::pair<Monomial, std::uint64_t>> terms;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] != 0) {
                terms.emplace_back(factorization.factors[i].exponents, coeffs[i]);
            }
        }
        const PhasePolynomial poly =
            PhasePolynomial::from_terms(spec.p, spec.n, m_max, terms);
        const HierarchyLevel level = level_closed_form(poly);
        if (level.value() <= spec.w) {
            if (options.oracle_sample > 0 &&
                result.oracle_checked < options.oracle_sample &&
                found % stride == 0) {
                const HierarchyLevel oracle =
                    level_recursive_oracle(poly.to_function_table());
                if (oracle != level) {
                    result.oracle_agrees = false;
                }
                ++result.oracle_checked;
            }
            ++found;
            if (options.collect_gates) {
                result.gates.push_back(poly);
            }
        }

        std::size_t i = coeffs.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (coeffs[i] + 1 < pm) {
                ++coeffs[i];
                std::fill(coeffs.begin() + i + 1, coeffs.end(), 0);
                done = false;
                break;
            }
            if (i == 0) break;
        }
        if (done) break;
    }

    result.count = found;
    result.matches = result.count == result.predicted;
    return result;
}

}  // namespace qudiag
