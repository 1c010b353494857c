#pragma once

#include <string_view>

#include "uptilt/geometry.hpp"
#include "uptilt/link_budget.hpp"
#include "uptilt/quadrature.hpp"

namespace uptilt {

/// Which closed-form outage expression applies, selected by h3 against [h1, h2].
enum class OutageBranch { Case12, Case34, Case5 };

std::string_view to_string(OutageBranch branch) noexcept;

OutageBranch outage_branch(const CorridorGeometry& geom, const BeamConfig& beam);

struct OutageResult {
  double probability;
  double derivative_wrt_alpha;  // per radian
  OutageBranch branch;
};

// Closed-form outage branches and their alpha-derivatives. Each throws BranchMisuse
// outside its regime (h3 < h1, h1 <= h3 < h2, h3 >= h2 respectively). They assume the
// serving beam's upper edge reaches the cell edge at every corridor height.
double outage_case12(const CorridorGeometry& geom, const BeamConfig& beam);
double outage_case34(const CorridorGeometry& geom, const BeamConfig& beam);
double outage_case5(const CorridorGeometry& geom, const BeamConfig& beam);
double outage_case12_derivative(const CorridorGeometry& geom, const BeamConfig& beam);
double outage_case34_derivative(const CorridorGeometry& geom, const BeamConfig& beam);
double outage_case5_derivative(const CorridorGeometry& geom, const BeamConfig& beam);

/// Outage probability: the fraction of the corridor outside the serving beam.
///
/// For altitude hx the served set of dx is (hx cot(alpha+beta), min(d1/2, hx cot alpha)),
/// so integrating over hx splits at h3 = (d1/2) tan(alpha) and at
/// h5 = (d1/2) tan(alpha+beta), both clamped to [h1, h2]. This coincides with the
/// branch formulas above whenever h5 >= h2 and stays in [0, 1] when it is not.
OutageResult outage(const CorridorGeometry& geom, const BeamConfig& beam);

struct AvgSinrResult {
  double value;  // linear
  CaseId case_id;
  double quadrature_error_estimate;
};

// Mean SINR over the corridor per coverage case, following the usual neglections:
// Case 1 counts only the interference region with noise dropped; Cases 2-5 count only
// the served region without interference. Each throws BranchMisuse when
// classify_case disagrees, and NumericalFailure when quadrature does not converge.
Integral avg_sinr_case1(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig& radio);
Integral avg_sinr_case2(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig& radio);
Integral avg_sinr_case3(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig& radio);
Integral avg_sinr_case4(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig& radio);
Integral avg_sinr_case5(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig& radio);

AvgSinrResult avg_sinr(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig& radio);

}  // namespace uptilt
