#pragma once

#include <stdexcept>
#include <string>

namespace famval {

// Error taxonomy: construction/validation failures throw
// std::invalid_argument; failures of a computation on otherwise valid
// inputs throw one of the std::domain_error subtypes below. The CLI maps
// the former to exit code 2 and the latter to exit code 3.

/// The family admits no hedge ratio: every member has the same expected
/// underlying value, so the delta denominator vanishes.
class DegenerateFamilyError : public std::domain_error {
public:
    explicit DegenerateFamilyError(const std::string& msg) : std::domain_error(msg) {}
};

/// Grid scaling cannot reach the spot condition (implied forward not positive).
class CannotCalibrateError : public std::domain_error {
public:
    explicit CannotCalibrateError(const std::string& msg) : std::domain_error(msg) {}
};

/// The spot does not satisfy the fair-regularity condition required before
/// building a hedged position.
class UncalibratedSpotError : public std::domain_error {
public:
    explicit UncalibratedSpotError(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace famval
