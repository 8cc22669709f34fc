#pragma once

#include <stdexcept>
#include <string>

namespace arcmot {

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// More than 100*trials consecutive sample points hit a vanishing denominator.
struct DegeneratePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroSubstitution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The value has no representation as (signed monomial) * poly / prod(1 - m)^e,
// e.g. the reciprocal of a numerator that is not a product of binomials.
struct NotRepresentable : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotADivisor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidSequence : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace arcmot
