#pragma once

#include <stdexcept>
#include <string>

namespace nevpull {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (e.g. |z| >= 1).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Evaluation requested exactly at a known singular point.
class SingularPointError : public Error {
public:
  using Error::Error;
};

/// The operation is not available for this family of self-maps.
class UnsupportedMapError : public Error {
public:
  using Error::Error;
};

/// Root polishing or another iterative step did not converge.
class NumericalError : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
public:
  using Error::Error;
};

/// A theorem's hypothesis does not hold for the requested parameters.
/// Callers treat this as "skipped", never as a failed check.
class HypothesisError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace nevpull
