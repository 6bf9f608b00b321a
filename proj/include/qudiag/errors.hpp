#pragma once

#include <stdexcept>
#include <string>

namespace qudiag {

struct NotPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ModulusMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

struct CaseNotApplicableError : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when a phase table cannot be represented by a phase polynomial
// (some normalized phase has a denominator that is not a power of p).
struct NotInHierarchyError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InconsistentDifferenceError : std::domain_error {
    using std::domain_error::domain_error;
};

struct TooLargeError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace qudiag
