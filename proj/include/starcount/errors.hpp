#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace starcount {

// Bad input value or precondition violation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A named structural constraint was violated (generator parameters and their
// inequalities). `constraint()` is the short machine-readable name.
class ConstraintViolation : public InvalidArgument {
 public:
  ConstraintViolation(std::string constraint, const std::string& detail)
      : InvalidArgument("constraint '" + constraint + "' violated: " + detail),
        constraint_(std::move(constraint)) {}

  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

// Sampling was requested from a source with zero total weight.
class EmptySourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& path = "")
      : std::runtime_error(format(line, detail, path)), line_(line), detail_(detail) {}

  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  static std::string format(std::size_t line, const std::string& detail, const std::string& path) {
    std::string where = path;
    if (line != 0) where += (where.empty() ? "line " : ":") + std::to_string(line);
    return where.empty() ? detail : where + ": " + detail;
  }

  std::size_t line_;
  std::string detail_;
};

// A sampled vertex has in-degree above r times its out-degree, so the
// rejection step would need an acceptance probability above one.
class RatioViolation : public std::runtime_error {
 public:
  RatioViolation(std::uint64_t vertex, const std::string& what)
      : std::runtime_error(what), vertex_(vertex) {}

  std::uint64_t vertex() const { return vertex_; }

 private:
  std::uint64_t vertex_;
};

}  // namespace starcount
