#pragma once

#include <string_view>

#include "uptilt/geometry.hpp"
#include "uptilt/units.hpp"

namespace uptilt {

enum class OptimizeMethod { GoldenSection, DerivativeBisection, Grid };

std::string_view to_string(OptimizeMethod method) noexcept;
OptimizeMethod parse_optimize_method(std::string_view text);

inline constexpr double kDefaultTiltMargin = deg_to_rad(0.05);

struct FeasibleInterval {
  double lo;
  double hi;
};

/// Uptilt range (margin, pi/2 - beta - margin). Throws InvalidInput when empty.
FeasibleInterval feasible_interval(double beta, double margin);

struct OptimizeResult {
  double alpha_star;      // radians
  double outage_at_star;
  int iterations;
  OptimizeMethod method;
  bool at_boundary;       // minimum sits on an end of the feasible interval
};

/// Uptilt minimizing outage for a fixed beamwidth. Outage does not depend on the peak
/// gain, so only beta is needed. margin must be positive.
///
/// GoldenSection assumes unimodality and stops at bracket width 1e-7 rad.
/// DerivativeBisection brackets a sign change of the analytic derivative on a coarse
/// scan, then bisects; without one it returns the better end point.
/// Grid scans every 0.01 degree and is the arbiter.
OptimizeResult optimize_uptilt(const CorridorGeometry& geom, double beta,
                               OptimizeMethod method = OptimizeMethod::GoldenSection,
                               double margin = kDefaultTiltMargin);

}  // namespace uptilt
