#pragma once

#include <stdexcept>
#include <string>

namespace kmetric {

/// Bad argument: out-of-range dimension, repeated vertex, shape mismatch.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested object would exceed the dense size guard.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The LP kernel could not produce a trustworthy answer.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A boundary target has no bounding chain on the allowed simplices.
class BoundaryNotFillable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the Fréchet construction when the input fails the strong simplex inequality.
class NotStrongError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File-format problem. Carries enough context for a machine-readable report.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, std::string field, const std::string& what)
      : std::runtime_error(what), file_(std::move(file)), line_(line), field_(std::move(field)) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string file_;
  int line_;
  std::string field_;
};

}  // namespace kmetric
