#include "qudiag/function_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace qudiag {

namespace {

std::size_t checked_table_size(std::uint64_t p, unsigned n) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (size > (std::uint64_t{1} << 40) / p) {
            throw TooLargeError("FunctionTable: p^n too large");
        }
        size *= p;
    }
    return static_cast<std::size_t>(size);
}

}  // namespace

FunctionTable::FunctionTable(PrimeModulus p, unsigned n, std::vector<PhaseFraction> values)
    : p_(p), n_(n), values_(std::move(values)) {
    if (n == 0) {
        throw std::invalid_argument("FunctionTable: needs at least one qudit");
    }
    if (values_.size() != checked_table_size(p.value(), n)) {
        throw std::invalid_argument("FunctionTable: expected exactly p^n entries");
    }
}

FunctionTable FunctionTable::zero(PrimeModulus p, unsigned n) {
    return FunctionTable(p, n, std::vector<PhaseFraction>(checked_table_size(p.value(), n)));
}

std::size_t FunctionTable::index_of(const std::vector<std::uint32_t>& j) const {
    if (j.size() != n_) {
        throw std::invalid_argument("FunctionTable: state vector has wrong length");
    }
    std::size_t index = 0;
    for (unsigned i = 0; i < n_; ++i) {
        if (j[i] >= p_.value()) {
            throw std::invalid_argument("FunctionTable: state component out of range");
        }
        index = index * static_cast<std::size_t>(p_.value()) + j[i];
    }
    return index;
}

std::vector<std::uint32_t> FunctionTable::state_of(std::size_t index) const {
    std::vector<std::uint32_t> j(n_, 0);
    for (unsigned i = n_; i-- > 0;) {
        j[i] = static_cast<std::uint32_t>(index % p_.value());
        index /= p_.value();
    }
    return j;
}

FunctionTable FunctionTable::normalized() const {
    FunctionTable result = *this;
    const PhaseFraction base = values_[0];
    for (auto& v : result.values_) {
        v = v - base;
    }
    return result;
}

bool FunctionTable::all_p_power() const {
    return std::all_of(values_.begin(), values_.end(),
                       [&](const PhaseFraction& v) { return v.p_power(p_.value()); });
}

unsigned FunctionTable::max_p_exponent() const {
    unsigned m = 0;
    for (const auto& v : values_) {
        m = std::max(m, v.p_exponent(p_.value()));
    }
    return m;
}

FunctionTable FunctionTable::operator+(const FunctionTable& rhs) const {
    if (p_ != rhs.p_ || n_ != rhs.n_) {
        throw ModulusMismatchError("FunctionTable: operands have different shape");
    }
    FunctionTable result = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        result.values_[i] = values_[i] + rhs.values_[i];
    }
    return result;
}

FunctionTable FunctionTable::operator-() const {
    FunctionTable result = *this;
    for (auto& v : result.values_) {
        v = -v;
    }
    return result;
}

FunctionTable FunctionTable::scaled(const BigInt& k) const {
    FunctionTable result = *this;
    for (auto& v : result.values_) {
        v = v * k;
    }
    return result;
}

FunctionTable shift_difference(const FunctionTable& table, unsigned direction) {
    if (direction >= table.qudits()) {
        throw std::invalid_argument("shift_difference: direction out of range");
    }
    std::vector<std::uint32_t> v(table.qudits(), 0);
    v[direction] = 1;
    return shift_difference_by(table, v);
}

FunctionTable shift_difference_by(const FunctionTable& table,
                                  const std::vector<std::uint32_t>& v) {
    if (v.size() != table.qudits()) {
        throw std::invalid_argument("shift_difference_by: shift vector has wrong length");
    }
    FunctionTable result = table;
    const std::uint64_t p = table.prime().value();
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::vector<std::uint32_t> shifted = table.state_of(idx);
        for (unsigned i = 0; i < shifted.size(); ++i) {
            shifted[i] = static_cast<std::uint32_t>((shifted[i] + v[i]) % p);
        }
        result.set(idx, table.at(shifted) - table.at(idx));
    }
    return result;
}

FunctionTable integrate_difference(const FunctionTable& delta, const PhaseFraction& phi) {
    if (delta.qudits() != 1) {
        throw std::invalid_argument("integrate_difference: expects a single-qudit table");
    }
    const std::uint64_t p = delta.prime().value();

    PhaseFraction total;
    for (std::size_t j = 0; j < delta.size(); ++j) {
        total += delta.at(j);
    }
    total += phi * BigInt(p);
    if (!total.is_zero()) {
        throw InconsistentDifferenceError(
            "integrate_difference: differences plus p*phi do not telescope to 0 (sum = " +
            total.str() + ")");
    }

    FunctionTable theta = FunctionTable::zero(delta.prime(), 1);
    PhaseFraction acc;
    for (std::size_t j = 1; j < static_cast<std::size_t>(p); ++j) {
        acc += delta.at(j) + phi;
        theta.set(j, acc);
    }
    return theta;
}

}  // namespace qudiag
