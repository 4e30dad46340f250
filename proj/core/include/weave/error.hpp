#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weave {

/// Input violated a documented precondition (wrong shape, unknown name, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural check on domain data failed (morphism axioms, determinacy,
/// rank-two data, ...). Carries the full human-readable diagnosis.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured size budget. Never truncates.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration limits shared by every exponential-size routine.
struct Budget {
  /// Maximum number of blocks/strips/search nodes materialized or counted.
  std::uint64_t max_items = std::uint64_t{1} << 22;
};

}  // namespace weave
