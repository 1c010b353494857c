#include "uptilt/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "uptilt/errors.hpp"
#include "uptilt/units.hpp"

namespace uptilt {

double noise_power(double thermal_density_dbm_hz, double bandwidth_hz, double noise_figure_db) {
  if (!(bandwidth_hz > 0.0)) {
    throw InvalidInput("noise_power: bandwidth must be positive");
  }
  return dbm_to_watts(thermal_density_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
}

double link_constant(double tx_power_w, double wavelength_m) {
  if (!(tx_power_w > 0.0) || !(wavelength_m > 0.0)) {
    throw InvalidInput("link_constant: power and wavelength must be positive");
  }
  return tx_power_w * wavelength_m * wavelength_m / (16.0 * std::numbers::pi * std::numbers::pi);
}

RadioConfig::RadioConfig(const Params& p)
    : tx_power_(dbm_to_watts(p.tx_power_dbm)),
      carrier_frequency_(p.carrier_frequency_hz),
      wavelength_(kSpeedOfLight / p.carrier_frequency_hz),
      noise_figure_db_(p.noise_figure_db),
      bandwidth_(p.bandwidth_hz),
      thermal_noise_dbm_hz_(p.thermal_noise_dbm_hz),
      noise_power_(uptilt::noise_power(p.thermal_noise_dbm_hz, p.bandwidth_hz, p.noise_figure_db)),
      sinr_threshold_(db_to_linear(p.sinr_threshold_db)),
      link_constant_(0.0) {
  if (!(p.carrier_frequency_hz > 0.0)) {
    throw InvalidInput("radio: carrier frequency must be positive");
  }
  link_constant_ = uptilt::link_constant(tx_power_, wavelength_);
}

GainModel parse_gain_model(std::string_view text) {
  if (text == "dB" || text == "db") {
    return GainModel::Decibel;
  }
  if (text == "linear") {
    return GainModel::Linear;
  }
  throw InvalidInput("unknown gain model '" + std::string(text) + "' (expected dB or linear)");
}

double antenna_gain_from_beamwidth(double beta_deg, GainModel model) {
  if (!(beta_deg > 0.0) || !(beta_deg < 90.0)) {
    throw InvalidInput("antenna gain: beamwidth must lie in (0, 90) degrees");
  }
  const double value = 297.6 / beta_deg;
  return model == GainModel::Decibel ? db_to_linear(value) : value;
}

double beam_gain_at(double theta, const BeamConfig& beam) noexcept {
  return (theta > beam.alpha() && theta < beam.upper_edge()) ? beam.gain() : 0.0;
}

double sinr(const UavPosition& pos, const CorridorGeometry& geom, const BeamConfig& beam,
            const RadioConfig& radio) {
  const auto [theta1, theta2] = elevation_angles(pos, geom);
  const double g1 = beam_gain_at(theta1, beam);
  if (g1 == 0.0) {
    return 0.0;
  }
  const double g2 = beam_gain_at(theta2, beam);
  const auto [r1, r2] = slant_ranges(pos.hx, theta1, theta2);
  const double k = radio.link_constant();
  return (k * g1 / (r1 * r1)) / (k * g2 / (r2 * r2) + radio.noise_power());
}

LinkEvaluator::LinkEvaluator(const CorridorGeometry& geom, const BeamConfig& beam,
                             const RadioConfig& radio)
    : d1_(geom.d1()),
      tan_lo_(std::tan(beam.alpha())),
      tan_hi_(std::tan(beam.upper_edge())),
      kg_(radio.link_constant() * beam.gain()),
      noise_(radio.noise_power()),
      threshold_(radio.sinr_threshold()) {}

}  // namespace uptilt
