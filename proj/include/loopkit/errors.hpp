#pragma once

#include <stdexcept>
#include <string>

namespace loopkit {

/// Input that does not have the shape an operation requires (wrong
/// dimensions, mismatched degrees, out-of-range indices).
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Text input that cannot be parsed. Carries a 1-based line and column.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string &what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// A size cap was exceeded (group closure, materialized extension).
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A matrix that was required to be invertible over Z_m is not.
class AutomorphismError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A precondition on the algebraic input failed, e.g. a loop without
/// two-sided inverses where one is needed.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Something that the construction guarantees did not hold. Indicates a bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Floating-point trouble: non-finite values, ill-conditioned solves.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace loopkit
