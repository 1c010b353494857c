#pragma once

#include <functional>

namespace uptilt {

struct Integral {
  double value = 0.0;
  double error_estimate = 0.0;
};

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  unsigned max_depth = 60;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]. Throws NumericalFailure when the error
/// estimate exceeds max(abs_tol, rel_tol * |value|) after the depth budget.
Integral integrate(const std::function<double(double)>& f, double a, double b,
                   const QuadratureOptions& opts = {});

inline Integral integrate(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol) {
  return integrate(f, a, b, QuadratureOptions{rel_tol, abs_tol, 60});
}

}  // namespace uptilt
