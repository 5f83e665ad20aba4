#ifndef EULERIAN_ERRORS_HPP
#define EULERIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eulerian {

/// An argument lies outside the domain of an operation (bad rank, zero
/// polynomial where a nonzero one is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal consistency assertion failed. This always indicates a bug in
/// the library, never a property of the input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exhaustive enumeration would exceed the configured element budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation produced evidence against a conjectured statement.
class ConjectureViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eulerian

#endif
