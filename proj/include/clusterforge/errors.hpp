#pragma once

#include <stdexcept>
#include <string>

namespace clusterforge {

/// Thrown when an exact Laurent division has a nonzero remainder. During
/// seed exploration this indicates a genuine bug: the Laurent phenomenon
/// guarantees every exchange division is exact.
class NotDivisibleError : public std::runtime_error {
public:
    explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a Grassmannian enumeration would exceed the configured budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when point counts do not interpolate to an integer polynomial,
/// i.e. the count is not polynomial in q or the module family is inconsistent
/// across primes.
class NonIntegralInterpolationError : public std::runtime_error {
public:
    explicit NonIntegralInterpolationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace clusterforge
