#pragma once

#include <cstdint>
#include <string>

#include "qudiag/errors.hpp"

namespace qudiag {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

// Sum of two residues already reduced mod `mod`, safe even when mod is close
// to 2^64.
inline std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    a %= mod;
    b %= mod;
    const std::uint64_t room = mod - a;
    return b >= room ? b - room : a + b;
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) {
            result = mulmod_u64(result, base, mod);
        }
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return result;
}

// Deterministic Miller-Rabin for 64-bit inputs; the witness set below is
// sufficient for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 0; i + 1 < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

// A prime qudit dimension. The constructor rejects composites.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::uint64_t p) : p_(p) {
        if (!detail::is_prime_u64(p)) {
            throw NotPrimeError("PrimeModulus: " + std::to_string(p) + " is not prime");
        }
    }

    std::uint64_t value() const { return p_; }

    bool operator==(const PrimeModulus&) const = default;

  private:
    std::uint64_t p_;
};

// Computes p^m, rejecting results that do not fit in 64 bits.
inline std::uint64_t prime_power(std::uint64_t p, unsigned m) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (result > UINT64_MAX / p) {
            throw std::overflow_error("prime power " + std::to_string(p) + "^" +
                                      std::to_string(m) + " exceeds 64 bits");
        }
        result *= p;
    }
    return result;
}

// An element of Z_{p^m}, stored as its representative in [0, p^m).
class Residue {
  public:
    Residue(std::uint64_t value, PrimeModulus prime, unsigned modulus_exponent)
        : prime_(prime),
          exponent_(modulus_exponent),
          modulus_(prime_power(prime.value(), modulus_exponent)) {
        if (modulus_exponent < 1) {
            throw std::invalid_argument("Residue: modulus exponent must be >= 1");
        }
        value_ = value % modulus_;
    }

    std::uint64_t value() const { return value_; }
    PrimeModulus prime() const { return prime_; }
    unsigned modulus_exponent() const { return exponent_; }
    std::uint64_t modulus() const { return modulus_; }

    bool operator==(const Residue& rhs) const {
        check_compatible(rhs);
        return value_ == rhs.value_;
    }

    Residue operator+(const Residue& rhs) const {
        check_compatible(rhs);
        return with_value(detail::addmod_u64(value_, rhs.value_, modulus_));
    }

    Residue operator-(const Residue& rhs) const {
        check_compatible(rhs);
        return with_value((value_ + modulus_ - rhs.value_) % modulus_);
    }

    Residue operator*(const Residue& rhs) const {
        check_compatible(rhs);
        return with_value(detail::mulmod_u64(value_, rhs.value_, modulus_));
    }

    Residue pow(std::uint64_t e) const {
        return with_value(detail::powmod_u64(value_, e, modulus_));
    }

    bool is_unit() const { return value_ % prime_.value() != 0; }

  private:
    Residue with_value(std::uint64_t v) const {
        Residue r = *this;
        r.value_ = v;
        return r;
    }

    void check_compatible(const Residue& rhs) const {
        if (prime_ != rhs.prime_ || exponent_ != rhs.exponent_) {
            throw ModulusMismatchError("Residue: operands live in different rings");
        }
    }

    std::uint64_t value_;
    PrimeModulus prime_;
    unsigned exponent_;
    std::uint64_t modulus_;
};

// Multiplicative inverse of a unit in Z_{p^m}: Fermat inverse mod p followed
// by Hensel lifting, x -> x(2 - a x), doubling the precision each round.
inline Residue unit_inverse(const Residue& a) {
    if (!a.is_unit()) {
        throw NotAUnitError("unit_inverse: " + std::to_string(a.value()) +
                            " is divisible by " + std::to_string(a.prime().value()));
    }
    const std::uint64_t p = a.prime().value();
    std::uint64_t mod = p;
    std::uint64_t x = detail::powmod_u64(a.value() % p, p - 2, p);
    while (mod < a.modulus()) {
        std::uint64_t next = mod > a.modulus() / mod ? a.modulus() : mod * mod;
        if (a.modulus() % next != 0) next = a.modulus();
        std::uint64_t ax = detail::mulmod_u64(a.value() % next, x, next);
        std::uint64_t two_minus_ax = detail::addmod_u64(2 % next, next - ax, next);
        x = detail::mulmod_u64(x, two_minus_ax, next);
        mod = next;
    }
    return Residue(x, a.prime(), a.modulus_exponent());
}

}  // namespace qudiag
