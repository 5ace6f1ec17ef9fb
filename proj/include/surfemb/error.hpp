#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace surfemb {

/// Malformed or semantically invalid input (graphs, rotations, words, files).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input exceeds the configured vertex/edge bound of the canonizer.
class SizeGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The rotation space of a graph is larger than the allowed number of
/// face tracings. Carries the required count so callers can raise the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("rotation space of " + std::to_string(required) +
                           " systems exceeds budget of " +
                           std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace surfemb
