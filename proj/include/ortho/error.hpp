#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

// Malformed or unsupported input. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure. The CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpec : public InputError {
 public:
  using InputError::InputError;
};

class NotPruned : public InputError {
 public:
  using InputError::InputError;
};

class TooFewCircles : public InputError {
 public:
  using InputError::InputError;
};

class TooFewEdges : public InputError {
 public:
  using InputError::InputError;
};

class DegenerateArc : public InputError {
 public:
  using InputError::InputError;
};

class EmptySpectrum : public InputError {
 public:
  using InputError::InputError;
};

class InvalidInsertion : public InputError {
 public:
  using InputError::InputError;
};

class NoConvergence : public NumericError {
 public:
  using NumericError::NumericError;
};

class NotAtEntropy : public NumericError {
 public:
  using NumericError::NumericError;
};

class BudgetExceeded : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace ortho
