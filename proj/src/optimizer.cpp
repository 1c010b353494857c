#include "uptilt/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "uptilt/analysis.hpp"
#include "uptilt/errors.hpp"

namespace uptilt {

namespace {

constexpr double kGoldenWidth = 1e-7;
constexpr double kBisectionWidth = 1e-12;
constexpr int kDerivativeScanPoints = 256;
const double kGridStep = deg_to_rad(0.01);

class OutageCurve {
 public:
  OutageCurve(const CorridorGeometry& geom, double beta) : geom_(geom), beta_(beta) {}

  OutageResult at(double alpha) const { return outage(geom_, BeamConfig(alpha, beta_, 1.0)); }
  double value(double alpha) const { return at(alpha).probability; }
  double slope(double alpha) const { return at(alpha).derivative_wrt_alpha; }

 private:
  const CorridorGeometry& geom_;
  double beta_;
};

OptimizeResult golden_section(const OutageCurve& curve, FeasibleInterval range) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = range.lo;
  double b = range.hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = curve.value(c);
  double fd = curve.value(d);
  int iterations = 0;
  while (b - a > kGoldenWidth) {
    ++iterations;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = curve.value(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = curve.value(d);
    }
  }
  double alpha = 0.5 * (a + b);
  double best = curve.value(alpha);
  bool at_boundary = false;
  // A bracket collapsed onto an end point means the minimum is on the boundary.
  for (double end : {range.lo, range.hi}) {
    if (std::abs(alpha - end) <= kGoldenWidth) {
      const double f_end = curve.value(end);
      if (f_end <= best) {
        alpha = end;
        best = f_end;
      }
      at_boundary = true;
    }
  }
  return {alpha, best, iterations, OptimizeMethod::GoldenSection, at_boundary};
}

OptimizeResult derivative_bisection(const OutageCurve& curve, FeasibleInterval range) {
  const double step = (range.hi - range.lo) / kDerivativeScanPoints;
  bool seen_descent = false;
  double left = range.lo;
  double right = range.lo;
  bool bracketed = false;
  for (int i = 0; i <= kDerivativeScanPoints && !bracketed; ++i) {
    const double x = i == kDerivativeScanPoints ? range.hi : range.lo + i * step;
    const double slope = curve.slope(x);
    if (slope < 0.0) {
      seen_descent = true;
      left = x;
    } else if (slope > 0.0 && seen_descent) {
      right = x;
      bracketed = true;
    } else if (slope == 0.0 && seen_descent) {
      return {x, curve.value(x), i, OptimizeMethod::DerivativeBisection, false};
    }
  }

  if (!bracketed) {
    const double f_lo = curve.value(range.lo);
    const double f_hi = curve.value(range.hi);
    const double alpha = f_hi < f_lo ? range.hi : range.lo;
    return {alpha, std::min(f_lo, f_hi), kDerivativeScanPoints, OptimizeMethod::DerivativeBisection,
            true};
  }

  int iterations = kDerivativeScanPoints;
  while (right - left > kBisectionWidth) {
    ++iterations;
    const double mid = 0.5 * (left + right);
    const double slope = curve.slope(mid);
    if (slope < 0.0) {
      left = mid;
    } else if (slope > 0.0) {
      right = mid;
    } else {
      left = right = mid;
    }
  }
  const double alpha = 0.5 * (left + right);
  return {alpha, curve.value(alpha), iterations, OptimizeMethod::DerivativeBisection, false};
}

OptimizeResult grid_scan(const OutageCurve& curve, FeasibleInterval range) {
  const auto steps = static_cast<int>(std::floor((range.hi - range.lo) / kGridStep));
  double best_alpha = range.lo;
  double best = curve.value(range.lo);
  for (int i = 1; i <= steps + 1; ++i) {
    const double x = i <= steps ? range.lo + i * kGridStep : range.hi;
    const double f = curve.value(x);
    if (f < best) {
      best = f;
      best_alpha = x;
    }
  }
  // The last regular point can coincide with range.hi up to rounding.
  const bool at_boundary = best_alpha - range.lo < 0.5 * kGridStep || range.hi - best_alpha < 0.5 * kGridStep;
  return {best_alpha, best, steps + 2, OptimizeMethod::Grid, at_boundary};
}

}  // namespace

std::string_view to_string(OptimizeMethod method) noexcept {
  switch (method) {
    case OptimizeMethod::GoldenSection: return "golden";
    case OptimizeMethod::DerivativeBisection: return "bisection";
    case OptimizeMethod::Grid: return "grid";
  }
  return "unknown";
}

OptimizeMethod parse_optimize_method(std::string_view text) {
  if (text == "golden") return OptimizeMethod::GoldenSection;
  if (text == "bisection") return OptimizeMethod::DerivativeBisection;
  if (text == "grid") return OptimizeMethod::Grid;
  throw InvalidInput("unknown optimize method '" + std::string(text) +
                     "' (expected golden, bisection or grid)");
}

FeasibleInterval feasible_interval(double beta, double margin) {
  const double half_pi = 0.5 * std::numbers::pi;
  if (!(margin >= 0.0) || !(beta > 0.0) || !(beta < half_pi - 2.0 * margin)) {
    std::ostringstream msg;
    msg << "no feasible uptilt for beamwidth " << rad_to_deg(beta) << " deg with margin "
        << rad_to_deg(margin) << " deg";
    throw InvalidInput(msg.str());
  }
  return {margin, half_pi - beta - margin};
}

OptimizeResult optimize_uptilt(const CorridorGeometry& geom, double beta, OptimizeMethod method,
                               double margin) {
  if (!(margin > 0.0)) {
    throw InvalidInput("optimize_uptilt: margin must be positive");
  }
  const FeasibleInterval range = feasible_interval(beta, margin);
  const OutageCurve curve(geom, beta);
  switch (method) {
    case OptimizeMethod::GoldenSection: return golden_section(curve, range);
    case OptimizeMethod::DerivativeBisection: return derivative_bisection(curve, range);
    case OptimizeMethod::Grid: return grid_scan(curve, range);
  }
  throw InvalidInput("optimize_uptilt: unknown method");
}

}  // namespace uptilt
