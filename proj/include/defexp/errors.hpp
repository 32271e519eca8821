#pragma once

#include <stdexcept>
#include <string>

namespace defexp {

// Exact polynomial division left a nonzero remainder.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// A division that the integrality structure guarantees to be exact failed.
// Always indicates an implementation bug, never bad input.
struct IntegralityViolation : std::runtime_error {
    explicit IntegralityViolation(const std::string& what) : std::runtime_error(what) {}
};

// A series coefficient changed after the iteration at which it must be final.
struct StabilizationFailure : std::runtime_error {
    explicit StabilizationFailure(const std::string& what) : std::runtime_error(what) {}
};

// Root-bound routines require a positive leading coefficient.
struct NonPositiveLeading : std::runtime_error {
    explicit NonPositiveLeading(const std::string& what) : std::runtime_error(what) {}
};

// Cancellation ate more than half of the requested working digits.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// An iterative numeric solve exceeded its iteration budget.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace defexp
