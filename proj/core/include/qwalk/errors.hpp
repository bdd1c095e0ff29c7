#pragma once

#include <stdexcept>

namespace qwalk {

// Input violates a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Problem size exceeds an explicit cap (full spin space, full-mode evolution).
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Heisenberg couplings outside the jx == jy family that reduces to a walk.
class UnsupportedCouplingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Degenerate perturbation requested for a partite set with no marked vertices.
class NoDegenerateLiftError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qwalk
