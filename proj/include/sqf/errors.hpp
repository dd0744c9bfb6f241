#pragma once

#include <stdexcept>
#include <string>

namespace sqf {

// Malformed or out-of-contract input. The CLI maps this to exit code 3.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search with no effective bound ran out of its candidate budget.
// The CLI maps this to exit code 2.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotGoodPrime : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The prime is not in R(f): either not good for f or f has no root modulo it.
class NotInRf : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SingularSeed : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DepthCapTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search that the theory says must succeed did not. Always a bug.
class InternalSearchExhausted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Constructions whose correctness depends on the Parity Conjecture.
class UnsupportedConditional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqf
