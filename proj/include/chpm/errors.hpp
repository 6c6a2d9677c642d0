#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace chpm {

// Precondition violations: bad orders, mismatched sizes, invalid parameters.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, std::string tag = "numerical")
      : std::runtime_error(what), tag_(std::move(tag)) {}

  // Short machine-readable identifier, used by the CLI and sweep records.
  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

class SingularMatrixError : public NumericalError {
 public:
  SingularMatrixError(std::size_t pivot, double magnitude)
      : NumericalError(message(pivot, magnitude), "singular"),
        pivot_(pivot) {}

  std::size_t pivot() const noexcept { return pivot_; }

 private:
  static std::string message(std::size_t pivot, double magnitude) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "matrix is numerically singular at pivot %zu (|pivot| = %.3e)",
                  pivot, magnitude);
    return buf;
  }

  std::size_t pivot_;
};

}  // namespace chpm
