#ifndef REPDIM_ERROR_HPP
#define REPDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace repdim {

// Malformed input: group specs, cycle strings, table JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction or search would exceed a configured resource bound.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the range a constructor or operation supports.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact check failed (orthogonality, oracle mismatch, stalled split).
// Always a bug or corrupted input, never an expected outcome.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked integer arithmetic overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace repdim

#endif  // REPDIM_ERROR_HPP
