#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvetop {

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive-precision isolation gave up. Raised when the coefficient
/// precision would exceed its cap, which certifies that the approximated
/// polynomial is not square-free (or has a vanishing leading coefficient).
class PrecisionOverflow : public std::runtime_error {
 public:
  PrecisionOverflow(const std::string& what, unsigned long precision,
                    std::size_t pending_intervals)
      : std::runtime_error(what),
        precision_(precision),
        pending_intervals_(pending_intervals) {}

  unsigned long precision() const { return precision_; }
  std::size_t pending_intervals() const { return pending_intervals_; }

 private:
  unsigned long precision_;
  std::size_t pending_intervals_;
};

/// A critical fiber violates generic position for the current shear.
class DegenerateFiber : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arc counts next to a critical fiber are inconsistent with its points.
class DelineabilityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input curve cannot be analyzed (typically: not square-free).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace curvetop
