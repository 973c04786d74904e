#pragma once

#include <stdexcept>
#include <string>

namespace sflow {

// Malformed input or a violated operation precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is well formed but does not satisfy the hypotheses of the
// 8-flow construction (not flow-admissible, or no nowhere-zero 4-flow).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction that is guaranteed to succeed did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bounded search ran out of nodes or time before deciding.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

}  // namespace sflow
