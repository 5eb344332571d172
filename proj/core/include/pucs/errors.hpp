#ifndef PUCS_ERRORS_HPP
#define PUCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pucs {

/// Dimension of an argument does not match the instance dimension.
class DimensionError : public std::runtime_error {
  public:
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid construction parameters (negative radius, lower > upper, ...).
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Uniform sampling requested on an unbounded set.
class SamplingError : public std::runtime_error {
  public:
    explicit SamplingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Enumeration would exceed the configured combination budget.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Problem-file syntax or semantic error, annotated with a line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

}  // namespace pucs

#endif  // PUCS_ERRORS_HPP
