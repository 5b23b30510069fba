#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerhg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list text. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A graph or signed graph that violates its structural invariants.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but outside the domain of the requested computation
/// (disconnected graph, k too small, enumeration cap exceeded, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An iterative method ran out of iterations.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity the library relies on did not hold numerically.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace powerhg
