#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zkplab {

// Caller violated a precondition (mismatched shapes, bad parameters).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Value outside the representable/required range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Inversion of zero; `index` identifies the first offending element when the
// failure came from a batch.
struct NonInvertibleError : std::domain_error {
    explicit NonInvertibleError(std::size_t idx = 0)
        : std::domain_error("non-invertible element at index " + std::to_string(idx)),
          index(idx) {}
    std::size_t index;
};

// Quotient-polynomial divisibility check failed: the instance is unsatisfied.
struct UnsatisfiedInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested run would exceed the configured memory budget.
struct MemoryBudgetError : std::runtime_error {
    MemoryBudgetError(std::uint64_t estimate_bytes, std::uint64_t budget_bytes)
        : std::runtime_error("estimated memory " + std::to_string(estimate_bytes) +
                             " bytes exceeds budget " + std::to_string(budget_bytes) + " bytes"),
          estimate(estimate_bytes),
          budget(budget_bytes) {}
    std::uint64_t estimate;
    std::uint64_t budget;
};

}  // namespace zkplab
