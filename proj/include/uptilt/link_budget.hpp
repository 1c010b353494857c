#pragma once

#include <string_view>

#include "uptilt/geometry.hpp"

namespace uptilt {

/// Linear-domain radio parameters. dB quantities are converted once, here.
class RadioConfig {
 public:
  struct Params {
    double tx_power_dbm = 30.0;
    double carrier_frequency_hz = 3e9;
    double bandwidth_hz = 100e6;
    double noise_figure_db = 9.0;
    double thermal_noise_dbm_hz = -174.0;
    double sinr_threshold_db = -3.0;
  };

  RadioConfig() : RadioConfig(Params{}) {}
  explicit RadioConfig(const Params& p);

  double tx_power() const noexcept { return tx_power_; }
  double carrier_frequency() const noexcept { return carrier_frequency_; }
  double wavelength() const noexcept { return wavelength_; }
  double noise_figure_db() const noexcept { return noise_figure_db_; }
  double bandwidth() const noexcept { return bandwidth_; }
  double thermal_noise_density_dbm_hz() const noexcept { return thermal_noise_dbm_hz_; }
  double noise_power() const noexcept { return noise_power_; }
  double sinr_threshold() const noexcept { return sinr_threshold_; }
  double link_constant() const noexcept { return link_constant_; }

 private:
  double tx_power_;
  double carrier_frequency_;
  double wavelength_;
  double noise_figure_db_;
  double bandwidth_;
  double thermal_noise_dbm_hz_;
  double noise_power_;
  double sinr_threshold_;
  double link_constant_;
};

/// N0 = TN + 10 log10(BW) + NF in dBm, returned in watts.
double noise_power(double thermal_density_dbm_hz, double bandwidth_hz, double noise_figure_db);

/// k = P * lambda^2 / (16 pi^2).
double link_constant(double tx_power_w, double wavelength_m);

enum class GainModel { Decibel, Linear };

GainModel parse_gain_model(std::string_view text);

/// Peak gain from beamwidth via 297.6 / beta_deg. The Decibel model reads that value
/// in dB; the Linear model uses it directly.
double antenna_gain_from_beamwidth(double beta_deg, GainModel model = GainModel::Decibel);

/// Rectangular pattern, open interval.
double beam_gain_at(double theta, const BeamConfig& beam) noexcept;

/// SINR of one UAV, with free-space loss to both base stations. Exactly 0 outside the
/// serving beam.
double sinr(const UavPosition& pos, const CorridorGeometry& geom, const BeamConfig& beam,
            const RadioConfig& radio);

/// Per-position link terms for hot loops. Beam membership is tested on tangents
/// (tan is increasing on (0, pi/2)), so no inverse trig is evaluated.
class LinkEvaluator {
 public:
  LinkEvaluator(const CorridorGeometry& geom, const BeamConfig& beam, const RadioConfig& radio);

  struct Terms {
    double signal;        // k g1 / R1^2
    double interference;  // k g2 / R2^2
    bool served;          // g1 > 0
    bool interfered;      // g2 > 0
  };

  Terms terms(double dx, double hx) const noexcept {
    const double t1 = hx / dx;
    const double far = d1_ - dx;
    const double t2 = hx / far;
    const bool served = t1 > tan_lo_ && t1 < tan_hi_;
    const bool interfered = t2 > tan_lo_ && t2 < tan_hi_;
    const double hh = hx * hx;
    return {served ? kg_ / (dx * dx + hh) : 0.0, interfered ? kg_ / (far * far + hh) : 0.0,
            served, interfered};
  }

  double sinr(double dx, double hx) const noexcept {
    const Terms t = terms(dx, hx);
    return t.served ? t.signal / (t.interference + noise_) : 0.0;
  }

  double noise_power() const noexcept { return noise_; }
  double threshold() const noexcept { return threshold_; }

 private:
  double d1_;
  double tan_lo_;
  double tan_hi_;
  double kg_;
  double noise_;
  double threshold_;
};

}  // namespace uptilt
