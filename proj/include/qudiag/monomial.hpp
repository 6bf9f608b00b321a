#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace qudiag {

// Exponent vector of one monomial j_1^{a_1} ... j_n^{a_n}.
class Monomial {
  public:
    explicit Monomial(std::vector<std::uint32_t> exponents)
        : exponents_(std::move(exponents)) {
        if (exponents_.empty()) {
            throw std::invalid_argument("Monomial: needs at least one variable");
        }
    }

    static Monomial unit(unsigned num_vars, unsigned var, std::uint32_t degree = 1) {
        std::vector<std::uint32_t> e(num_vars, 0);
        e.at(var) = degree;
        return Monomial(std::move(e));
    }

    const std::vector<std::uint32_t>& exponents() const { return exponents_; }
    unsigned num_vars() const { return static_cast<unsigned>(exponents_.size()); }
    std::uint32_t degree(unsigned var) const { return exponents_.at(var); }

    std::uint32_t weight() const {
        return std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0});
    }

    bool is_zero() const { return weight() == 0; }

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;

    // "j^2" for one variable, "j1*j3^2" for several; "1" for the empty monomial.
    std::string str() const {
        std::ostringstream out;
        bool first = true;
        for (unsigned i = 0; i < num_vars(); ++i) {
            if (exponents_[i] == 0) continue;
            if (!first) out << "*";
            out << "j";
            if (num_vars() > 1) out << (i + 1);
            if (exponents_[i] > 1) out << "^" << exponents_[i];
            first = false;
        }
        if (first) out << "1";
        return out.str();
    }

  private:
    std::vector<std::uint32_t> exponents_;
};

}  // namespace qudiag
