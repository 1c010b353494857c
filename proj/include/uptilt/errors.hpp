#pragma once

#include <stdexcept>
#include <string>

namespace uptilt {

// Out-of-domain arguments and infeasible configurations.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A closed-form branch evaluated outside the regime it was derived for.
class BranchMisuse : public InvalidInput {
 public:
  explicit BranchMisuse(const std::string& what) : InvalidInput(what) {}
};

// Quadrature or iteration budget exhausted.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

}  // namespace uptilt
