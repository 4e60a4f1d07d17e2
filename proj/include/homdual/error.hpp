#pragma once

#include <stdexcept>

namespace homdual {

// Input broke a documented precondition: malformed graph text, a parameter
// out of range, a graph of the wrong shape for the operation.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force routine was asked to run past its size guard.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An internal consistency check failed. Seeing one of these means either a
// bug or a caller that ignored an operation's contract.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homdual
