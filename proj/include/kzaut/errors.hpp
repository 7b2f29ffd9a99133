#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace kzaut {

/// Operands come from different rings, algebras or fields.
struct ContextError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (zero divisor,
/// leading term of zero, unknown variable, composite modulus, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Matrix or transcript dimensions do not agree.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A matrix (or the Jacobian of an endomorphism) is not invertible.
struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

/// An image of an endomorphism is not homogeneous of degree one in X.
struct NotXLinear : std::domain_error {
  NotXLinear(std::size_t slot, std::string term, const std::string& what)
      : std::domain_error(what), slot(slot), term(std::move(term)) {}
  std::size_t slot;  // 0-based index j of the offending image f_j
  std::string term;
};

/// Syntax error in an expression, endomorphism file or transcript.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace kzaut
