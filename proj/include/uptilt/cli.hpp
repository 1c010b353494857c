#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uptilt/analysis.hpp"
#include "uptilt/geometry.hpp"
#include "uptilt/link_budget.hpp"
#include "uptilt/montecarlo.hpp"
#include "uptilt/optimizer.hpp"

namespace uptilt::cli {

inline constexpr const char* kCsvHeader =
    "alpha_deg,beta_deg,h2_m,case,branch,pr_out_analytic,pr_out_mc,pr_out_mc_se,"
    "sinr_avg_db_analytic,sinr_avg_db_mc,sinr_avg_db_mc_se";

struct SweepOutputs {
  bool outage_analytic = true;
  bool outage_mc = true;
  bool avg_sinr_analytic = true;
  bool avg_sinr_mc = true;
  bool case_id = true;
};

SweepOutputs parse_outputs(const std::vector<std::string>& names);

struct SweepSpec {
  double alpha_start_deg = 1.0;
  std::optional<double> alpha_stop_deg;  // default 89 - beta
  double alpha_step_deg = 0.5;
  std::vector<double> beta_values_deg{50.0};
  std::vector<double> h2_values_m{300.0};
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t mc_seed = 0;
  McMode mc_mode = McMode::Exact;
  SweepOutputs outputs;
};

/// Everything except the swept quantities.
struct Scenario {
  double d1 = 1000.0;
  double h1 = 100.0;
  RadioConfig::Params radio;
  GainModel gain_model = GainModel::Decibel;
};

/// "%.6g"; NaN and infinities are emitted as empty cells.
std::string format_number(double value);

/// Writes the header and one row per (h2, beta, alpha), in that nesting order.
/// Infeasible (alpha, beta) pairs yield a row with case "infeasible" and empty metrics.
/// A quadrature failure aborts after flushing earlier rows, naming the failing row.
void run_sweep(const SweepSpec& spec, const Scenario& scenario, std::ostream& out);

struct OptimizeReport {
  double beta_deg;
  double h2_m;
  OptimizeResult optimum;
  CaseId case_at_optimum;
  OutageBranch branch_at_optimum;
  McEstimate mc_outage;
};

OptimizeReport run_optimize(const Scenario& scenario, double beta_deg, double h2_m,
                            OptimizeMethod method, double margin_deg, const McConfig& mc);

void print_report(const OptimizeReport& report, std::ostream& out);

/// Full command line entry point. Returns the process exit code:
/// 0 success, 2 invalid arguments or infeasible request, 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uptilt::cli
