#include "uptilt/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "uptilt/errors.hpp"
#include "uptilt/units.hpp"

namespace uptilt::cli {

namespace {

struct DbCell {
  std::string value;
  std::string std_error;
};

// Delta-method standard error for 10 log10(mean).
DbCell to_db_cells(const McEstimate& est) {
  if (!(est.mean > 0.0)) {
    return {};
  }
  return {format_number(linear_to_db(est.mean)),
          format_number(10.0 / std::log(10.0) * est.std_error / est.mean)};
}

std::string db_cell(double linear) {
  return linear > 0.0 ? format_number(linear_to_db(linear)) : std::string{};
}

std::vector<double> alpha_grid(const SweepSpec& spec, double beta_deg) {
  const double stop = spec.alpha_stop_deg.value_or(89.0 - beta_deg);
  std::vector<double> grid;
  if (stop < spec.alpha_start_deg) {
    return grid;
  }
  const auto n = static_cast<long>(std::floor((stop - spec.alpha_start_deg) / spec.alpha_step_deg + 1e-9));
  for (long i = 0; i <= n; ++i) {
    grid.push_back(spec.alpha_start_deg + static_cast<double>(i) * spec.alpha_step_deg);
  }
  return grid;
}

std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value >= 1.0) || value != std::floor(value) || value > 1e18) {
    throw InvalidInput("invalid sample count '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) {
    return {};
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

SweepOutputs parse_outputs(const std::vector<std::string>& names) {
  SweepOutputs out{false, false, false, false, false};
  for (const std::string& name : names) {
    if (name == "outage_analytic") out.outage_analytic = true;
    else if (name == "outage_mc") out.outage_mc = true;
    else if (name == "avg_sinr_analytic") out.avg_sinr_analytic = true;
    else if (name == "avg_sinr_mc") out.avg_sinr_mc = true;
    else if (name == "case_id") out.case_id = true;
    else throw InvalidInput("unknown output '" + name + "'");
  }
  return out;
}

void run_sweep(const SweepSpec& spec, const Scenario& scenario, std::ostream& out) {
  if (!(spec.alpha_step_deg > 0.0)) {
    throw InvalidInput("sweep: alpha step must be positive");
  }
  const RadioConfig radio(scenario.radio);
  const McConfig mc{spec.mc_samples, spec.mc_seed, spec.mc_mode};
  out << kCsvHeader << '\n';

  for (double h2 : spec.h2_values_m) {
    const CorridorGeometry geom(scenario.d1, scenario.h1, h2);
    for (double beta_deg : spec.beta_values_deg) {
      const double gain = antenna_gain_from_beamwidth(beta_deg, scenario.gain_model);
      for (double alpha_deg : alpha_grid(spec, beta_deg)) {
        std::vector<std::string> row(11);
        row[0] = format_number(alpha_deg);
        row[1] = format_number(beta_deg);
        row[2] = format_number(h2);
        const double alpha = deg_to_rad(alpha_deg);
        const double beta = deg_to_rad(beta_deg);
        if (!BeamConfig::feasible(alpha, beta)) {
          row[3] = "infeasible";
        } else {
          const BeamConfig beam(alpha, beta, gain);
          if (spec.outputs.case_id) {
            row[3] = std::string(to_string(classify_case(geom, beam)));
            row[4] = std::string(to_string(outage_branch(geom, beam)));
          }
          if (spec.outputs.outage_analytic) {
            row[5] = format_number(outage(geom, beam).probability);
          }
          if (spec.outputs.outage_mc) {
            const McEstimate est = empirical_outage(geom, beam, radio, mc);
            row[6] = format_number(est.mean);
            row[7] = format_number(est.std_error);
          }
          if (spec.outputs.avg_sinr_analytic) {
            try {
              row[8] = db_cell(avg_sinr(geom, beam, radio).value);
            } catch (const NumericalFailure& e) {
              out.flush();
              std::ostringstream msg;
              msg << "sweep row alpha=" << alpha_deg << " beta=" << beta_deg << " h2=" << h2
                  << ": " << e.what();
              throw NumericalFailure(msg.str(), e.error_estimate());
            }
          }
          if (spec.outputs.avg_sinr_mc) {
            const DbCell cells = to_db_cells(empirical_avg_sinr(geom, beam, radio, mc));
            row[9] = cells.value;
            row[10] = cells.std_error;
          }
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? "," : "") << row[i];
        }
        out << '\n';
      }
    }
  }
  out.flush();
}

OptimizeReport run_optimize(const Scenario& scenario, double beta_deg, double h2_m,
                            OptimizeMethod method, double margin_deg, const McConfig& mc) {
  const CorridorGeometry geom(scenario.d1, scenario.h1, h2_m);
  const double beta = deg_to_rad(beta_deg);
  const double gain = antenna_gain_from_beamwidth(beta_deg, scenario.gain_model);
  const OptimizeResult optimum = optimize_uptilt(geom, beta, method, deg_to_rad(margin_deg));
  const BeamConfig beam(optimum.alpha_star, beta, gain);
  const RadioConfig radio(scenario.radio);
  return {beta_deg,
          h2_m,
          optimum,
          classify_case(geom, beam),
          outage_branch(geom, beam),
          empirical_outage(geom, beam, radio, mc)};
}

void print_report(const OptimizeReport& r, std::ostream& out) {
  const double gap = std::abs(r.mc_outage.mean - r.optimum.outage_at_star);
  out << "beta_deg: " << format_number(r.beta_deg) << '\n'
      << "h2_m: " << format_number(r.h2_m) << '\n'
      << "method: " << to_string(r.optimum.method) << '\n'
      << "alpha_star_deg: " << format_number(rad_to_deg(r.optimum.alpha_star)) << '\n'
      << "pr_out_min: " << format_number(r.optimum.outage_at_star) << '\n'
      << "case: " << to_string(r.case_at_optimum) << '\n'
      << "branch: " << to_string(r.branch_at_optimum) << '\n'
      << "iterations: " << r.optimum.iterations << '\n'
      << "at_boundary: " << (r.optimum.at_boundary ? "true" : "false") << '\n'
      << "pr_out_mc: " << format_number(r.mc_outage.mean) << '\n'
      << "pr_out_mc_se: " << format_number(r.mc_outage.std_error) << '\n'
      << "mc_samples: " << r.mc_outage.samples << '\n'
      << "mc_within_3se: " << (gap <= 3.0 * r.mc_outage.std_error ? "true" : "false") << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uptilt optimization and coverage analysis for a two-BS drone corridor", "uptilt"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; keys are long flag names");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Scenario scenario;
  double h2 = 300.0;
  std::optional<double> alpha_deg;
  double beta_deg = 50.0;
  double freq_ghz = 3.0;
  double bw_mhz = 100.0;
  std::string gain_model = "dB";
  std::string samples = "1e6";
  std::uint64_t seed = 0;
  std::string mode = "exact";
  std::string out_path;

  app.add_option("--d1", scenario.d1, "BS spacing [m]")->capture_default_str();
  app.add_option("--h1", scenario.h1, "Corridor floor [m]")->capture_default_str();
  app.add_option("--h2", h2, "Corridor ceiling [m]")->capture_default_str();
  app.add_option("--alpha", alpha_deg, "Uptilt [deg]");
  app.add_option("--beta", beta_deg, "Beamwidth [deg]")->capture_default_str();
  app.add_option("--tx-dbm", scenario.radio.tx_power_dbm, "Transmit power [dBm]")->capture_default_str();
  app.add_option("--freq-ghz", freq_ghz, "Carrier frequency [GHz]")->capture_default_str();
  app.add_option("--bw-mhz", bw_mhz, "Bandwidth [MHz]")->capture_default_str();
  app.add_option("--nf-db", scenario.radio.noise_figure_db, "Noise figure [dB]")->capture_default_str();
  app.add_option("--tau-db", scenario.radio.sinr_threshold_db, "SINR threshold [dB]")->capture_default_str();
  app.add_option("--gain-model", gain_model, "Reading of 297.6/beta: dB or linear")->capture_default_str();
  app.add_option("--samples", samples, "Monte Carlo samples")->capture_default_str();
  app.add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--mode", mode, "Monte Carlo mode: exact or paper")->capture_default_str();
  app.add_option("--out", out_path, "Output file (default stdout)");

  SweepSpec sweep;
  std::vector<double> betas;
  std::vector<double> h2_values;
  std::vector<std::string> outputs;
  app.add_option("--alpha-start", sweep.alpha_start_deg, "Sweep: first uptilt [deg]")->capture_default_str();
  app.add_option("--alpha-stop", sweep.alpha_stop_deg, "Sweep: last uptilt [deg] (default 89 - beta)");
  app.add_option("--alpha-step", sweep.alpha_step_deg, "Sweep: uptilt step [deg]")->capture_default_str();
  app.add_option("--betas", betas, "Sweep: beamwidths [deg] (default --beta)")->delimiter(',');
  app.add_option("--h2-values", h2_values, "Sweep: corridor ceilings [m] (default --h2)")->delimiter(',');
  app.add_option("--outputs", outputs,
                 "Sweep columns: outage_analytic,outage_mc,avg_sinr_analytic,avg_sinr_mc,case_id")
      ->delimiter(',');

  std::string method = "golden";
  double margin_deg = rad_to_deg(kDefaultTiltMargin);
  app.add_option("--method", method, "Optimize: golden, bisection or grid")->capture_default_str();
  app.add_option("--margin-deg", margin_deg, "Optimize: feasibility margin [deg]")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Coverage case and crossing heights");
  auto* outage_cmd = app.add_subcommand("outage", "Closed-form outage probability and derivative");
  auto* avg_cmd = app.add_subcommand("avg-sinr", "Average SINR by case");
  auto* mc_cmd = app.add_subcommand("montecarlo", "Monte Carlo outage and average SINR");
  auto* opt_cmd = app.add_subcommand("optimize", "Optimal uptilt for --beta and --h2");
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep over uptilt, beamwidth and ceiling");
  for (auto* sub : {classify_cmd, outage_cmd, avg_cmd, mc_cmd, opt_cmd, sweep_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    scenario.radio.carrier_frequency_hz = freq_ghz * 1e9;
    scenario.radio.bandwidth_hz = bw_mhz * 1e6;
    scenario.gain_model = parse_gain_model(gain_model);
    const McConfig mc{parse_count(samples), seed, parse_mc_mode(mode)};

    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        throw InvalidInput("cannot open output file '" + out_path + "'");
      }
      sink = &file;
    }

    if (*sweep_cmd) {
      sweep.beta_values_deg = betas.empty() ? std::vector<double>{beta_deg} : betas;
      sweep.h2_values_m = h2_values.empty() ? std::vector<double>{h2} : h2_values;
      sweep.mc_samples = mc.samples;
      sweep.mc_seed = mc.seed;
      sweep.mc_mode = mc.mode;
      if (!outputs.empty()) {
        sweep.outputs = parse_outputs(outputs);
      }
      run_sweep(sweep, scenario, *sink);
      return 0;
    }

    if (*opt_cmd) {
      print_report(run_optimize(scenario, beta_deg, h2, parse_optimize_method(method), margin_deg, mc),
                   *sink);
      return 0;
    }

    if (!alpha_deg) {
      throw InvalidInput("--alpha is required for this subcommand");
    }
    const CorridorGeometry geom(scenario.d1, scenario.h1, h2);
    const BeamConfig beam(deg_to_rad(*alpha_deg), deg_to_rad(beta_deg),
                          antenna_gain_from_beamwidth(beta_deg, scenario.gain_model));
    const RadioConfig radio(scenario.radio);
    std::ostream& o = *sink;

    if (*classify_cmd) {
      const CrossingHeights h = crossing_heights(geom, beam);
      o << "case: " << to_string(classify_case(geom, beam)) << '\n'
        << "branch: " << to_string(outage_branch(geom, beam)) << '\n'
        << "h3_m: " << format_number(h.h3) << '\n'
        << "h4_m: " << format_number(h.h4) << '\n';
    } else if (*outage_cmd) {
      const OutageResult r = outage(geom, beam);
      o << "pr_out: " << format_number(r.probability) << '\n'
        << "dpr_out_dalpha_per_rad: " << format_number(r.derivative_wrt_alpha) << '\n'
        << "branch: " << to_string(r.branch) << '\n';
    } else if (*avg_cmd) {
      const AvgSinrResult r = avg_sinr(geom, beam, radio);
      o << "sinr_avg_linear: " << format_number(r.value) << '\n'
        << "sinr_avg_db: " << db_cell(r.value) << '\n'
        << "case: " << to_string(r.case_id) << '\n'
        << "quadrature_error: " << format_number(r.quadrature_error_estimate) << '\n';
    } else if (*mc_cmd) {
      const McEstimate pr = empirical_outage(geom, beam, radio, mc);
      const McEstimate avg = empirical_avg_sinr(geom, beam, radio, mc);
      const DbCell avg_db = to_db_cells(avg);
      o << "mode: " << mode << '\n'
        << "samples: " << mc.samples << '\n'
        << "seed: " << mc.seed << '\n'
        << "pr_out_mc: " << format_number(pr.mean) << '\n'
        << "pr_out_mc_se: " << format_number(pr.std_error) << '\n'
        << "sinr_avg_mc_linear: " << format_number(avg.mean) << '\n'
        << "sinr_avg_mc_linear_se: " << format_number(avg.std_error) << '\n'
        << "sinr_avg_db_mc: " << avg_db.value << '\n'
        << "sinr_avg_db_mc_se: " << avg_db.std_error << '\n';
    }
    return 0;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalFailure& e) {
    sink->flush();
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace uptilt::cli
