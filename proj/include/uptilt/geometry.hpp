#pragma once

#include <optional>
#include <string_view>
#include <utility>

namespace uptilt {

/// Two base stations at ground level, `d1` apart, serving a corridor that spans
/// altitudes [h1, h2]. All lengths in meters.
class CorridorGeometry {
 public:
  CorridorGeometry(double d1, double h1, double h2);

  double d1() const noexcept { return d1_; }
  double h1() const noexcept { return h1_; }
  double h2() const noexcept { return h2_; }
  double half_spacing() const noexcept { return 0.5 * d1_; }

 private:
  double d1_;
  double h1_;
  double h2_;
};

/// Beamwidth and peak gain of the rectangular pattern, without a tilt.
struct BeamShape {
  double beta;  // radians
  double gain;  // linear
};

/// Rectangular elevation pattern: gain G on the open interval (alpha, alpha + beta).
/// Both base stations share the same configuration.
class BeamConfig {
 public:
  BeamConfig(double alpha, double beta, double gain);
  BeamConfig(double alpha, BeamShape shape) : BeamConfig(alpha, shape.beta, shape.gain) {}

  /// alpha > 0, beta > 0 and alpha + beta < pi/2.
  static bool feasible(double alpha, double beta) noexcept;

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gain() const noexcept { return gain_; }
  double upper_edge() const noexcept { return alpha_ + beta_; }
  BeamShape shape() const noexcept { return {beta_, gain_}; }

 private:
  double alpha_;
  double beta_;
  double gain_;
};

/// UAV position relative to its serving (nearest) base station.
/// Valid positions have 0 < dx <= d1/2 and h1 <= hx <= h2.
struct UavPosition {
  double dx;
  double hx;
};

struct ElevationAngles {
  double theta1;  // from the serving BS
  double theta2;  // from the neighboring BS
};

struct CrossingHeights {
  double h3;  // lower edges of the two beams cross above the cell edge
  double h4;  // upper edge of the serving beam meets the neighbor's lower edge
};

struct SlantRanges {
  double r1;
  double r2;
};

enum class CaseId { Case1 = 1, Case2, Case3, Case4, Case5 };

std::string_view to_string(CaseId id) noexcept;

ElevationAngles elevation_angles(const UavPosition& pos, const CorridorGeometry& geom);

struct AngleInterval {
  double lo;
  double hi;
};

/// Support of the serving elevation angle at altitude hx: (atan(2 hx / d1), pi/2).
AngleInterval theta1_domain(double hx, const CorridorGeometry& geom);

/// Density of theta1 given hx when dx is uniform on (0, d1/2].
double theta1_pdf(double theta1, double hx, const CorridorGeometry& geom);

CrossingHeights crossing_heights(const CorridorGeometry& geom, const BeamConfig& beam);

/// Altitude where the serving beam's upper edge reaches the cell edge, (d1/2) tan(alpha + beta).
/// Above it no position in the half-cell is inside the serving beam.
double upper_edge_cell_edge_height(const CorridorGeometry& geom, const BeamConfig& beam);

/// Ties (h3 or h4 equal to h1 or h2) resolve to the higher-numbered case.
CaseId classify_case(const CorridorGeometry& geom, const BeamConfig& beam);

/// Serving elevation angle at which the neighbor sees the UAV exactly at its lower beam
/// edge: cot(gamma) = d1/hx - cot(alpha). Empty when that point would lie beyond the
/// neighboring base station (d1/hx <= cot alpha).
std::optional<double> gamma_angle(double hx, const CorridorGeometry& geom, const BeamConfig& beam);

SlantRanges slant_ranges(double hx, double theta1, double theta2);

}  // namespace uptilt
