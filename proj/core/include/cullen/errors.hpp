#pragma once

#include <stdexcept>
#include <string>

namespace cullen {

/// Raised when a computed fact contradicts a step of the non-Lehmer argument.
/// Seeing one of these means either a bug or a genuine counterexample.
class ProofViolation : public std::runtime_error {
public:
    ProofViolation(std::string step, const std::string& what)
        : std::runtime_error(step + ": " + what), step_(std::move(step)) {}

    const std::string& step() const noexcept { return step_; }

private:
    std::string step_;
};

/// An iteration budget ran out before a definite answer was reached.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Factor-cache storage failure (open, read or append).
class CacheIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cullen
