#ifndef MUCUT_ERRORS_HPP
#define MUCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mucut {

/// Premise shape does not fit the rule tag.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (wrong endsequent, level too
/// high, selection not a subset, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Delta-family was invoked on a sequent/witness pair it does not admit.
class AdmissionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FuelExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state the theory rules out was reached; always a bug.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mucut

#endif  // MUCUT_ERRORS_HPP
