#pragma once

#include <stdexcept>
#include <string>

namespace braids {

// Malformed input data (JSON shape, rational syntax, index ranges).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation does not hold (invalid arrangement,
// cycle-creating edge insertion, non-generic path, tube degeneracy, ...).
struct ContractViolation : std::runtime_error {
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// Loop closure data inconsistent with the computed endpoints.
struct ClosureError : std::runtime_error {
  explicit ClosureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace braids
