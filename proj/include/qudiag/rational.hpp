#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qudiag/errors.hpp"

namespace qudiag {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// A phase in Q/Z, measured in turns: the represented phase factor is
// exp(2*pi*i * numerator/denominator). Always reduced and held in [0, 1).
class PhaseFraction {
  public:
    PhaseFraction() : value_(0) {}

    PhaseFraction(BigInt numerator, BigInt denominator) {
        if (denominator <= 0) {
            throw std::invalid_argument("PhaseFraction: denominator must be positive");
        }
        value_ = BigRational(std::move(numerator), std::move(denominator));
        wrap();
    }

    explicit PhaseFraction(BigRational turns) : value_(std::move(turns)) { wrap(); }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }

    // True when the denominator is a power of p (p^0 = 1 counts).
    bool p_power(std::uint64_t p) const {
        BigInt den = denominator();
        while (den % p == 0) {
            den /= p;
        }
        return den == 1;
    }

    // Exponent e with denominator = p^e; requires p_power(p).
    unsigned p_exponent(std::uint64_t p) const {
        BigInt den = denominator();
        unsigned e = 0;
        while (den % p == 0) {
            den /= p;
            ++e;
        }
        if (den != 1) {
            throw std::domain_error("PhaseFraction: denominator is not a power of " +
                                    std::to_string(p));
        }
        return e;
    }

    PhaseFraction operator+(const PhaseFraction& rhs) const {
        return PhaseFraction(value_ + rhs.value_);
    }
    PhaseFraction operator-(const PhaseFraction& rhs) const {
        return PhaseFraction(value_ - rhs.value_);
    }
    PhaseFraction operator-() const { return PhaseFraction(-value_); }

    PhaseFraction operator*(const BigInt& k) const { return PhaseFraction(value_ * k); }

    PhaseFraction& operator+=(const PhaseFraction& rhs) { return *this = *this + rhs; }
    PhaseFraction& operator-=(const PhaseFraction& rhs) { return *this = *this - rhs; }

    bool operator==(const PhaseFraction& rhs) const = default;
    std::strong_ordering operator<=>(const PhaseFraction& rhs) const {
        if (value_ < rhs.value_) return std::strong_ordering::less;
        if (value_ > rhs.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "num/den", e.g. "0/1", "3/8".
    std::string str() const {
        return numerator().str() + "/" + denominator().str();
    }

  private:
    void wrap() {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        BigInt num = numerator(value_) % denominator(value_);
        if (num < 0) {
            num += denominator(value_);
        }
        value_ = BigRational(num, denominator(value_));
    }

    BigRational value_;  // reduced, 0 <= value < 1
};

}  // namespace qudiag
