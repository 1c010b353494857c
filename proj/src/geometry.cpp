#include "uptilt/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "uptilt/errors.hpp"

namespace uptilt {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

CorridorGeometry::CorridorGeometry(double d1, double h1, double h2) : d1_(d1), h1_(h1), h2_(h2) {
  if (!(d1 > 0.0) || !std::isfinite(d1)) {
    throw InvalidInput("corridor: d1 must be positive");
  }
  if (!(h1 > 0.0) || !(h2 > h1) || !std::isfinite(h2)) {
    std::ostringstream msg;
    msg << "corridor: need 0 < h1 < h2, got h1=" << h1 << " h2=" << h2;
    throw InvalidInput(msg.str());
  }
}

bool BeamConfig::feasible(double alpha, double beta) noexcept {
  return alpha > 0.0 && beta > 0.0 && alpha + beta < kHalfPi;
}

BeamConfig::BeamConfig(double alpha, double beta, double gain)
    : alpha_(alpha), beta_(beta), gain_(gain) {
  if (!feasible(alpha, beta)) {
    std::ostringstream msg;
    msg << "beam: need alpha > 0, beta > 0, alpha + beta < pi/2 (alpha=" << alpha
        << " rad, beta=" << beta << " rad)";
    throw InvalidInput(msg.str());
  }
  if (!(gain > 0.0) || !std::isfinite(gain)) {
    throw InvalidInput("beam: gain must be positive");
  }
}

std::string_view to_string(CaseId id) noexcept {
  switch (id) {
    case CaseId::Case1: return "case1";
    case CaseId::Case2: return "case2";
    case CaseId::Case3: return "case3";
    case CaseId::Case4: return "case4";
    case CaseId::Case5: return "case5";
  }
  return "unknown";
}

ElevationAngles elevation_angles(const UavPosition& pos, const CorridorGeometry& geom) {
  if (!(pos.dx > 0.0) || pos.dx > geom.half_spacing()) {
    throw InvalidInput("elevation_angles: dx must lie in (0, d1/2]");
  }
  if (!(pos.hx > 0.0)) {
    throw InvalidInput("elevation_angles: hx must be positive");
  }
  return {std::atan(pos.hx / pos.dx), std::atan(pos.hx / (geom.d1() - pos.dx))};
}

AngleInterval theta1_domain(double hx, const CorridorGeometry& geom) {
  if (hx < geom.h1() || hx > geom.h2()) {
    throw InvalidInput("theta1_domain: hx outside [h1, h2]");
  }
  return {std::atan(2.0 * hx / geom.d1()), kHalfPi};
}

double theta1_pdf(double theta1, double hx, const CorridorGeometry& geom) {
  const auto [lo, hi] = theta1_domain(hx, geom);
  if (theta1 < lo || theta1 > hi) {
    return 0.0;
  }
  const double s = std::sin(theta1);
  return 2.0 * hx / (geom.d1() * s * s);
}

CrossingHeights crossing_heights(const CorridorGeometry& geom, const BeamConfig& beam) {
  return {geom.half_spacing() * std::tan(beam.alpha()),
          geom.d1() / (cot(beam.alpha()) + cot(beam.upper_edge()))};
}

double upper_edge_cell_edge_height(const CorridorGeometry& geom, const BeamConfig& beam) {
  return geom.half_spacing() * std::tan(beam.upper_edge());
}

CaseId classify_case(const CorridorGeometry& geom, const BeamConfig& beam) {
  const auto [h3, h4] = crossing_heights(geom, beam);
  const double h1 = geom.h1();
  const double h2 = geom.h2();
  if (h3 >= h2) {
    return CaseId::Case5;
  }
  if (h3 >= h1) {
    return h4 >= h2 ? CaseId::Case4 : CaseId::Case3;
  }
  return h4 >= h1 ? CaseId::Case2 : CaseId::Case1;
}

std::optional<double> gamma_angle(double hx, const CorridorGeometry& geom, const BeamConfig& beam) {
  const double cot_gamma = geom.d1() / hx - cot(beam.alpha());
  if (!(cot_gamma > 0.0)) {
    return std::nullopt;
  }
  return std::atan(1.0 / cot_gamma);
}

SlantRanges slant_ranges(double hx, double theta1, double theta2) {
  return {hx / std::sin(theta1), hx / std::sin(theta2)};
}

}  // namespace uptilt
