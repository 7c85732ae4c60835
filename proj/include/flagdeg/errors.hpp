#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagdeg {

/// Malformed input: bad Cartan type, out-of-range index, dimension mismatch,
/// violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration refused because the group is larger than the cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t group_order, std::uint64_t cap)
      : std::runtime_error("Weyl group of order " + std::to_string(group_order) +
                           " exceeds enumeration cap " + std::to_string(cap)),
        order_(group_order),
        cap_(cap) {}

  std::uint64_t group_order() const noexcept { return order_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

/// A computation exceeded its wall-clock budget.
class Timeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold mathematically did not.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flagdeg
