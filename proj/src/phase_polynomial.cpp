#include "qudiag/phase_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qudiag {

namespace {

// Coefficient vectors (index = degree) of the one-variable Lagrange basis
// over Z_{p^M}: delta_k(x) = prod_{k' != k} (x - k') / (k - k'), which is 1 at
// x = k and 0 at the other points of [0, p-1]. Every k - k' is a unit mod p^M.
std::vector<std::vector<std::uint64_t>> lagrange_basis(PrimeModulus p, unsigned m) {
    const std::uint64_t pp = p.value();
    const std::uint64_t pm = prime_power(pp, m);
    std::vector<std::vector<std::uint64_t>> basis;
    basis.reserve(pp);
    for (std::uint64_t k = 0; k < pp; ++k) {
        std::vector<std::uint64_t> coeffs{1};
        std::uint64_t denom = 1;
        for (std::uint64_t kp = 0; kp < pp; ++kp) {
            if (kp == k) continue;
            // multiply by (x - kp)
            std::vector<std::uint64_t> next(coeffs.size() + 1, 0);
            const std::uint64_t neg_kp = (pm - kp % pm) % pm;
            for (std::size_t d = 0; d < coeffs.size(); ++d) {
                next[d] = detail::addmod_u64(
                    next[d], detail::mulmod_u64(coeffs[d], neg_kp, pm), pm);
                next[d + 1] = detail::addmod_u64(next[d + 1], coeffs[d], pm);
            }
            coeffs = std::move(next);
            const std::uint64_t diff = k >= kp ? k - kp : pm - (kp - k) % pm;
            denom = detail::mulmod_u64(denom, diff % pm, pm);
        }
        const std::uint64_t inv =
            unit_inverse(Residue(denom, p, m)).value();
        for (auto& c : coeffs) {
            c = detail::mulmod_u64(c, inv, pm);
        }
        coeffs.resize(pp, 0);
        basis.push_back(std::move(coeffs));
    }
    return basis;
}

BigInt big_binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

}  // namespace

PhasePolynomial PhasePolynomial::from_terms(
    PrimeModulus p, unsigned n, unsigned precision,
    const std::vector<std::pair<Monomial, std::uint64_t>>& terms,
    PhaseFraction global_phase) {
    PhasePolynomial poly(p, n);
    poly.precision_ = precision;
    poly.global_phase_ = std::move(global_phase);
    const std::uint64_t pm = prime_power(p.value(), precision);
    for (const auto& [mono, coeff] : terms) {
        if (mono.num_vars() != n) {
            throw std::invalid_argument("PhasePolynomial: monomial has wrong arity");
        }
        auto [it, inserted] = poly.coeffs_.try_emplace(mono, 0);
        it->second = detail::addmod_u64(it->second, coeff, pm);
    }
    poly.canonicalize();
    return poly;
}

PhaseFraction PhasePolynomial::evaluate(const std::vector<std::uint32_t>& j) const {
    if (j.size() != n_) {
        throw std::invalid_argument("PhasePolynomial: state vector has wrong length");
    }
    const std::uint64_t pm = denominator();
    std::uint64_t acc = 0;
    for (const auto& [mono, coeff] : coeffs_) {
        std::uint64_t term = coeff;
        for (unsigned i = 0; i < n_; ++i) {
            term = detail::mulmod_u64(term, detail::powmod_u64(j[i], mono.degree(i), pm), pm);
        }
        acc = detail::addmod_u64(acc, term, pm);
    }
    return PhaseFraction(BigInt(acc), BigInt(pm)) + global_phase_;
}

FunctionTable PhasePolynomial::to_function_table() const {
    FunctionTable table = FunctionTable::zero(p_, n_);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        table.set(idx, evaluate(table.state_of(idx)));
    }
    return table;
}

PhasePolynomial PhasePolynomial::from_function_table(const FunctionTable& table) {
    const PrimeModulus p = table.prime();
    const std::uint64_t pp = p.value();
    PhasePolynomial poly(p, table.qudits());
    poly.global_phase_ = table.at(std::size_t{0});

    const FunctionTable normalized = table.normalized();
    if (!normalized.all_p_power()) {
        throw NotInHierarchyError(
            "from_function_table: a normalized phase has a denominator that is not a "
            "power of " +
            std::to_string(pp) + "; no phase-polynomial form exists");
    }
    const unsigned m = normalized.max_p_exponent();
    poly.precision_ = m;
    if (m == 0) {
        return poly;  // constant table: global phase only
    }

    const std::uint64_t pm = prime_power(pp, m);
    const auto basis = lagrange_basis(p, m);

    // theta(j) = sum_j u_j * prod_i delta_{j_i}(x_i) with u_j the table value
    // scaled to denominator p^m; expand the product one variable at a time.
    const unsigned n = table.qudits();
    for (std::size_t idx = 0; idx < normalized.size(); ++idx) {
        const PhaseFraction& v = normalized.at(idx);
        if (v.is_zero()) continue;
        const unsigned e = v.p_exponent(pp);
        const std::uint64_t scale = prime_power(pp, m - e);
        const std::uint64_t u = detail::mulmod_u64(
            static_cast<std::uint64_t>(v.numerator() % BigInt(pm)), scale, pm);

        const std::vector<std::uint32_t> state = normalized.state_of(idx);
        std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> partial{
            {{}, u}};
        for (unsigned i = 0; i < n; ++i) {
            const auto& delta = basis[state[i]];
            std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> next;
            next.reserve(partial.size() * pp);
            for (const auto& [exps, c] : partial) {
                for (std::uint32_t d = 0; d < pp; ++d) {
                    if (delta[d] == 0) continue;
                    const std::uint64_t nc = detail::mulmod_u64(c, delta[d], pm);
                    if (nc == 0) continue;
                    auto extended = exps;
                    extended.push_back(d);
                    next.emplace_back(std::move(extended), nc);
                }
            }
            partial = std::move(next);
        }
        for (auto& [exps, c] : partial) {
            auto [it, inserted] = poly.coeffs_.try_emplace(Monomial(std::move(exps)), 0);
            it->second = detail::addmod_u64(it->second, c, pm);
        }
    }

    poly.canonicalize();
    return poly;
}

void PhasePolynomial::canonicalize() {
    const std::uint64_t pp = p_.value();
    std::uint64_t pm = prime_power(pp, precision_);

    bool needs_reinterpolation = false;
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        it->second %= pm;
        if (it->second == 0) {
            it = coeffs_.erase(it);
            continue;
        }
        if (it->first.is_zero()) {
            global_phase_ += PhaseFraction(BigInt(it->second), BigInt(pm));
            it = coeffs_.erase(it);
            continue;
        }
        for (unsigned i = 0; i < n_; ++i) {
            if (it->first.degree(i) >= pp) {
                needs_reinterpolation = true;
            }
        }
        ++it;
    }

    if (needs_reinterpolation) {
        *this = from_function_table(to_function_table());
        return;
    }

    while (!coeffs_.empty()) {
        const bool all_divisible =
            std::all_of(coeffs_.begin(), coeffs_.end(),
                        [&](const auto& kv) { return kv.second % pp == 0; });
        if (!all_divisible) break;
        for (auto& [mono, c] : coeffs_) {
            c /= pp;
        }
        --precision_;
        pm /= pp;
    }
    if (coeffs_.empty()) {
        precision_ = 0;
    }
}

std::string PhasePolynomial::str() const {
    std::ostringstream out;
    if (!coeffs_.empty()) {
        out << "(";
        bool first = true;
        for (const auto& [mono, c] : coeffs_) {
            if (!first) out << " + ";
            if (c != 1) out << c << "*";
            out << mono.str();
            first = false;
        }
        out << ")/" << denominator();
    }
    if (!global_phase_.is_zero() || coeffs_.empty()) {
        if (!coeffs_.empty()) out << " + ";
        out << global_phase_.str();
    }
    return out.str();
}

PhasePolynomial monomial_difference(unsigned a, PrimeModulus p, unsigned m) {
    if (a < 1 || a > p.value() - 1) {
        throw std::invalid_argument("monomial_difference: requires 1 <= a <= p-1");
    }
    const std::uint64_t pm = prime_power(p.value(), m);
    std::vector<std::pair<Monomial, std::uint64_t>> terms;
    PhaseFraction global;
    for (unsigned d = 0; d < a; ++d) {
        // j^a - (j-1)^a contributes C(a,d) * (-1)^{a-d+1} at degree d
        const std::uint64_t c =
            static_cast<std::uint64_t>(big_binomial(a, d) % BigInt(pm));
        const std::uint64_t signed_c = ((a - d) % 2 == 1) ? c : (pm - c) % pm;
        if (d == 0) {
            global += PhaseFraction(BigInt(signed_c), BigInt(pm));
        } else {
            terms.emplace_back(Monomial({d}), signed_c);
        }
    }
    return PhasePolynomial::from_terms(p, 1, m, terms, global);
}

}  // namespace qudiag
