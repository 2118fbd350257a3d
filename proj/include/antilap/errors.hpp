#pragma once

#include <stdexcept>
#include <string>

namespace antilap {

// Argument outside an operation's domain (parity, range, frame mismatch).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested on a singular set of a field.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical procedure did not reach its tolerance. Carries the best value found.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial, double error)
      : std::runtime_error(what), partial_(partial), error_(error) {}

  double partial() const noexcept { return partial_; }
  double error() const noexcept { return error_; }

 private:
  double partial_;
  double error_;
};

// Sampled values fell below what double precision can resolve.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Query is well formed but has no implementation (e.g. pairing for a family
// whose source is not a point functional).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antilap
