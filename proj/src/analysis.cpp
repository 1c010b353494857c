#include "uptilt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uptilt/errors.hpp"

namespace uptilt {

namespace {

double cot(double x) { return std::cos(x) / std::sin(x); }

double csc2(double x) {
  const double s = std::sin(x);
  return 1.0 / (s * s);
}

double center_crossing(const CorridorGeometry& geom, const BeamConfig& beam) {
  return geom.half_spacing() * std::tan(beam.alpha());
}

void require_case(const CorridorGeometry& geom, const BeamConfig& beam, CaseId expected,
                  const char* op) {
  const CaseId actual = classify_case(geom, beam);
  if (actual != expected) {
    throw BranchMisuse(std::string(op) + ": configuration is " + std::string(to_string(actual)));
  }
}

void require_branch(const CorridorGeometry& geom, const BeamConfig& beam, OutageBranch expected,
                    const char* op) {
  const OutageBranch actual = outage_branch(geom, beam);
  if (actual != expected) {
    throw BranchMisuse(std::string(op) + ": configuration is in branch " +
                       std::string(to_string(actual)));
  }
}

// 2 k G / (d1 N0 (h2 - h1)): common factor of the noise-limited average SINR.
double noise_limited_scale(const CorridorGeometry& geom, const BeamConfig& beam,
                           const RadioConfig& radio) {
  return 2.0 * radio.link_constant() * beam.gain() /
         (geom.d1() * radio.noise_power() * (geom.h2() - geom.h1()));
}

// Served region without interference between h3 and `top`: theta1 in (gamma(hx), alpha+beta).
Integral gamma_limited_term(const CorridorGeometry& geom, const BeamConfig& beam,
                            const RadioConfig& radio, double from, double top) {
  if (!(top > from)) {
    return {};
  }
  const double scale = noise_limited_scale(geom, beam, radio);
  const double cot_alpha = cot(beam.alpha());
  const double upper = beam.upper_edge();
  const double d1 = geom.d1();
  auto integrand = [&](double hx) {
    const double cot_gamma = d1 / hx - cot_alpha;
    if (!(cot_gamma > 0.0)) {
      throw NumericalFailure("avg_sinr: gamma undefined inside integration range", 0.0);
    }
    const double width = upper - std::atan(1.0 / cot_gamma);
    return scale / hx * std::max(width, 0.0);
  };
  return integrate(integrand, from, top);
}

Integral cases34(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig& radio) {
  const auto [h3, h4] = crossing_heights(geom, beam);
  const double full_beam =
      noise_limited_scale(geom, beam, radio) * beam.beta() * std::log(h3 / geom.h1());
  Integral tail = gamma_limited_term(geom, beam, radio, h3, std::min(h4, geom.h2()));
  return {full_beam + tail.value, tail.error_estimate};
}

}  // namespace

std::string_view to_string(OutageBranch branch) noexcept {
  switch (branch) {
    case OutageBranch::Case12: return "c12";
    case OutageBranch::Case34: return "c34";
    case OutageBranch::Case5: return "c5";
  }
  return "unknown";
}

OutageBranch outage_branch(const CorridorGeometry& geom, const BeamConfig& beam) {
  const double h3 = center_crossing(geom, beam);
  if (h3 >= geom.h2()) {
    return OutageBranch::Case5;
  }
  return h3 >= geom.h1() ? OutageBranch::Case34 : OutageBranch::Case12;
}

double outage_case12(const CorridorGeometry& geom, const BeamConfig& beam) {
  require_branch(geom, beam, OutageBranch::Case12, "outage_case12");
  return (geom.h1() + geom.h2()) / geom.d1() * cot(beam.upper_edge());
}

double outage_case12_derivative(const CorridorGeometry& geom, const BeamConfig& beam) {
  require_branch(geom, beam, OutageBranch::Case12, "outage_case12_derivative");
  return -(geom.h1() + geom.h2()) / geom.d1() * csc2(beam.upper_edge());
}

double outage_case34(const CorridorGeometry& geom, const BeamConfig& beam) {
  require_branch(geom, beam, OutageBranch::Case34, "outage_case34");
  const double d1 = geom.d1();
  const double h1 = geom.h1();
  const double h2 = geom.h2();
  const double t = std::tan(beam.alpha());
  return 1.0 + (h1 + h2) / d1 * cot(beam.upper_edge()) -
         (0.25 * d1 * d1 * t * t - h1 * h1) / (d1 * (h2 - h1)) / t -
         (h2 - 0.5 * d1 * t) / (h2 - h1);
}

double outage_case34_derivative(const CorridorGeometry& geom, const BeamConfig& beam) {
  require_branch(geom, beam, OutageBranch::Case34, "outage_case34_derivative");
  const double d1 = geom.d1();
  const double h1 = geom.h1();
  const double h2 = geom.h2();
  const double c = std::cos(beam.alpha());
  return -(h1 + h2) / d1 * csc2(beam.upper_edge()) + d1 / (4.0 * (h2 - h1) * c * c) -
         h1 * h1 / (d1 * (h2 - h1)) * csc2(beam.alpha());
}

double outage_case5(const CorridorGeometry& geom, const BeamConfig& beam) {
  require_branch(geom, beam, OutageBranch::Case5, "outage_case5");
  return 1.0 + (geom.h1() + geom.h2()) / geom.d1() * (cot(beam.upper_edge()) - cot(beam.alpha()));
}

double outage_case5_derivative(const CorridorGeometry& geom, const BeamConfig& beam) {
  require_branch(geom, beam, OutageBranch::Case5, "outage_case5_derivative");
  return -(geom.h1() + geom.h2()) / geom.d1() * (csc2(beam.upper_edge()) - csc2(beam.alpha()));
}

OutageResult outage(const CorridorGeometry& geom, const BeamConfig& beam) {
  const double d1 = geom.d1();
  const double h1 = geom.h1();
  const double h2 = geom.h2();
  const double lower = std::clamp(center_crossing(geom, beam), h1, h2);
  const double upper = std::clamp(upper_edge_cell_edge_height(geom, beam), h1, h2);
  const double lower_sq = lower * lower - h1 * h1;
  const double upper_sq = upper * upper - h1 * h1;

  const double served =
      (cot(beam.alpha()) * lower_sq - cot(beam.upper_edge()) * upper_sq) / d1 + (upper - lower);
  const double probability = std::clamp(1.0 - served / (h2 - h1), 0.0, 1.0);
  // The clamp boundaries move with alpha, but their contributions cancel.
  const double derivative =
      (csc2(beam.alpha()) * lower_sq - csc2(beam.upper_edge()) * upper_sq) / (d1 * (h2 - h1));
  return {probability, derivative, outage_branch(geom, beam)};
}

Integral avg_sinr_case1(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig&) {
  require_case(geom, beam, CaseId::Case1, "avg_sinr_case1");
  const double d1 = geom.d1();
  const double span = geom.h2() - geom.h1();
  const double upper = beam.upper_edge();
  const double log_sin_upper = std::log(std::sin(upper));
  const double cot_upper = cot(upper);
  // Inner theta1 integral of (R2/R1)^2 f(theta1 | hx) from atan(2hx/d1) to alpha+beta,
  // in antiderivative form.
  auto integrand = [&](double hx) {
    const double ratio = 2.0 * hx / d1;
    const double edge = std::atan(ratio);
    const double log_sin_edge = std::log(ratio / std::sqrt(1.0 + ratio * ratio));
    const double value = 2.0 * d1 / hx * (upper - edge) - 4.0 * (log_sin_upper - log_sin_edge) -
                         ratio * (cot_upper - d1 / (2.0 * hx));
    return value / span;
  };
  const double top = std::min(geom.h2(), upper_edge_cell_edge_height(geom, beam));
  if (!(top > geom.h1())) {
    return {};
  }
  return integrate(integrand, geom.h1(), top);
}

Integral avg_sinr_case2(const CorridorGeometry& geom, const BeamConfig& beam,
                        const RadioConfig& radio) {
  require_case(geom, beam, CaseId::Case2, "avg_sinr_case2");
  const double h4 = crossing_heights(geom, beam).h4;
  return gamma_limited_term(geom, beam, radio, geom.h1(), std::min(h4, geom.h2()));
}

Integral avg_sinr_case3(const CorridorGeometry& geom, const BeamConfig& beam,
                        const RadioConfig& radio) {
  require_case(geom, beam, CaseId::Case3, "avg_sinr_case3");
  return cases34(geom, beam, radio);
}

Integral avg_sinr_case4(const CorridorGeometry& geom, const BeamConfig& beam,
                        const RadioConfig& radio) {
  require_case(geom, beam, CaseId::Case4, "avg_sinr_case4");
  return cases34(geom, beam, radio);
}

Integral avg_sinr_case5(const CorridorGeometry& geom, const BeamConfig& beam,
                        const RadioConfig& radio) {
  require_case(geom, beam, CaseId::Case5, "avg_sinr_case5");
  return {noise_limited_scale(geom, beam, radio) * beam.beta() * std::log(geom.h2() / geom.h1()),
          0.0};
}

AvgSinrResult avg_sinr(const CorridorGeometry& geom, const BeamConfig& beam,
                       const RadioConfig& radio) {
  const CaseId id = classify_case(geom, beam);
  Integral result;
  switch (id) {
    case CaseId::Case1: result = avg_sinr_case1(geom, beam, radio); break;
    case CaseId::Case2: result = avg_sinr_case2(geom, beam, radio); break;
    case CaseId::Case3: result = avg_sinr_case3(geom, beam, radio); break;
    case CaseId::Case4: result = avg_sinr_case4(geom, beam, radio); break;
    case CaseId::Case5: result = avg_sinr_case5(geom, beam, radio); break;
  }
  return {result.value, id, result.error_estimate};
}

}  // namespace uptilt
