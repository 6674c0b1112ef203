#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radring {

// Argument outside the mathematical domain of an operation (zero divisor,
// mismatched rings, non-prime where a prime is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input is valid but exceeds a configured enumeration or arithmetic cap.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A structural hypothesis (e.g. m | q-1) does not hold for the input.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Raised by ring::inverse for a non-unit. Carries the unital determinant and
// its gcd with the modulus, which together explain the failure.
class NotInvertibleError : public DomainError {
 public:
  NotInvertibleError(std::uint64_t det, std::uint64_t gcd_with_n)
      : DomainError("element is not a unit: det = " + std::to_string(det) +
                    ", gcd(det, n) = " + std::to_string(gcd_with_n)),
        det_(det),
        gcd_(gcd_with_n) {}

  std::uint64_t det() const noexcept { return det_; }
  std::uint64_t gcd_with_modulus() const noexcept { return gcd_; }

 private:
  std::uint64_t det_;
  std::uint64_t gcd_;
};

}  // namespace radring
