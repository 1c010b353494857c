#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "uptilt/errors.hpp"
#include "uptilt/link_budget.hpp"
#include "uptilt/units.hpp"

using namespace uptilt;
using doctest::Approx;

namespace {

const CorridorGeometry kDefault(1000.0, 100.0, 300.0);

}  // namespace

TEST_CASE("noise power") {
  CHECK(noise_power(-174.0, 1e8, 9.0) == Approx(3.16227766016838e-12).epsilon(1e-12));
  CHECK(watts_to_dbm(noise_power(-174.0, 1.0, 0.0)) == Approx(-174.0).epsilon(1e-12));
  CHECK(watts_to_dbm(noise_power(-174.0, 1e6, 0.0)) == Approx(-114.0).epsilon(1e-12));
  CHECK_THROWS_AS(noise_power(-174.0, 0.0, 9.0), InvalidInput);
}

TEST_CASE("link constant") {
  CHECK(link_constant(1.0, kSpeedOfLight / 3e9) == Approx(6.32381517460383e-5).epsilon(1e-12));
  CHECK(link_constant(16.0 * std::numbers::pi * std::numbers::pi, 1.0) ==
        Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(link_constant(0.0, 0.1), InvalidInput);

  const RadioConfig radio;
  CHECK(radio.tx_power() == Approx(1.0).epsilon(1e-15));
  CHECK(radio.wavelength() == Approx(0.0999308193333333).epsilon(1e-14));
  CHECK(radio.sinr_threshold() == Approx(0.501187233627272).epsilon(1e-12));
  CHECK(radio.link_constant() ==
        radio.tx_power() * radio.wavelength() * radio.wavelength() /
            (16.0 * std::numbers::pi * std::numbers::pi));
}

TEST_CASE("antenna gain from beamwidth") {
  CHECK(antenna_gain_from_beamwidth(29.76) == Approx(10.0).epsilon(1e-12));
  CHECK(antenna_gain_from_beamwidth(50.0) == Approx(3.93731353700851).epsilon(1e-12));
  CHECK(antenna_gain_from_beamwidth(10.0) == Approx(946.237161365793).epsilon(1e-12));
  CHECK(antenna_gain_from_beamwidth(50.0, GainModel::Linear) == Approx(5.952));
  CHECK_THROWS_AS(antenna_gain_from_beamwidth(0.0), InvalidInput);
  CHECK_THROWS_AS(antenna_gain_from_beamwidth(90.0), InvalidInput);
  CHECK(parse_gain_model("linear") == GainModel::Linear);
  CHECK_THROWS_AS(parse_gain_model("log"), InvalidInput);
}

TEST_CASE("rectangular beam gain") {
  const BeamConfig beam(0.4, 0.2, 7.0);
  CHECK(beam_gain_at(0.5, beam) == 7.0);
  CHECK(beam_gain_at(0.4, beam) == 0.0);
  CHECK(beam_gain_at(0.39, beam) == 0.0);
  CHECK(beam_gain_at(beam.upper_edge(), beam) == 0.0);
  CHECK(beam_gain_at(0.61, beam) == 0.0);
}

TEST_CASE("sinr examples") {
  const RadioConfig radio;
  const double k = radio.link_constant();
  const double n0 = radio.noise_power();

  SUBCASE("just above the center crossing both beams cover") {
    const BeamConfig beam(deg_to_rad(25.0), deg_to_rad(10.0), antenna_gain_from_beamwidth(10.0));
    const double hx = 500.0 * std::tan(beam.alpha()) + 1.0;
    const double r2 = 500.0 * 500.0 + hx * hx;
    const double expected = (k * beam.gain() / r2) / (k * beam.gain() / r2 + n0);
    const double value = sinr({500.0, hx}, kDefault, beam, radio);
    CHECK(value == Approx(expected).epsilon(1e-13));
    CHECK(value < 1.0);
    CHECK(value > 0.999);
  }

  SUBCASE("served without interference") {
    const BeamConfig beam(deg_to_rad(40.0), deg_to_rad(10.0), 946.24);
    const double value = sinr({100.0, 100.0}, kDefault, beam, radio);
    CHECK(value == Approx(k * 946.24 / (n0 * 20000.0)).epsilon(1e-13));
    CHECK(value == Approx(946129.264).epsilon(1e-9));
    CHECK(linear_to_db(value) == Approx(59.7595).epsilon(1e-5));
  }

  SUBCASE("outside the serving beam") {
    const BeamConfig beam(deg_to_rad(60.0), deg_to_rad(10.0), 946.24);
    CHECK(sinr({100.0, 100.0}, kDefault, beam, radio) == 0.0);
  }
}

TEST_CASE("sinr scales with power without interference") {
  const BeamConfig beam(deg_to_rad(40.0), deg_to_rad(10.0), antenna_gain_from_beamwidth(10.0));
  RadioConfig::Params p;
  const double base = sinr({100.0, 100.0}, kDefault, beam, RadioConfig(p));
  p.tx_power_dbm += linear_to_db(2.0);
  CHECK(sinr({100.0, 100.0}, kDefault, beam, RadioConfig(p)) == Approx(2.0 * base).epsilon(1e-13));
}

TEST_CASE("fast evaluator agrees with sinr") {
  const RadioConfig radio;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dxs(1e-3, 500.0), hxs(100.0, 300.0);
  for (double beta_deg : {10.0, 30.0, 50.0, 70.0}) {
    const BeamConfig beam(deg_to_rad(15.0), deg_to_rad(beta_deg), antenna_gain_from_beamwidth(beta_deg));
    const LinkEvaluator link(kDefault, beam, radio);
    for (int i = 0; i < 20000; ++i) {
      const UavPosition pos{dxs(rng), hxs(rng)};
      const double ref = sinr(pos, kDefault, beam, radio);
      CHECK(link.sinr(pos.dx, pos.hx) == Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("outage happens exactly outside the serving beam under default radio") {
  // 1000 x 1000 positions per configuration; the threshold is met everywhere the serving
  // beam reaches, and the bound kG/(N0 R1min^2) holds.
  const RadioConfig radio;
  for (double beta_deg : {10.0, 30.0, 50.0, 70.0}) {
    const double gain = antenna_gain_from_beamwidth(beta_deg);
    for (double alpha_deg : {2.0, 11.0, 18.0, 25.0}) {
      if (alpha_deg + beta_deg >= 90.0) continue;
      const BeamConfig beam(deg_to_rad(alpha_deg), deg_to_rad(beta_deg), gain);
      const double ceiling = radio.link_constant() * gain / (radio.noise_power() * 100.0 * 100.0);
      int mismatches = 0;
      for (int i = 0; i < 1000; ++i) {
        const double dx = 500.0 * (i + 0.5) / 1000.0;
        for (int j = 0; j < 1000; ++j) {
          const double hx = 100.0 + 200.0 * (j + 0.5) / 1000.0;
          const double s = sinr({dx, hx}, kDefault, beam, radio);
          const bool in_beam = beam_gain_at(std::atan(hx / dx), beam) > 0.0;
          mismatches += (s >= radio.sinr_threshold()) != in_beam;
          if (s < 0.0 || s > ceiling) ++mismatches;
        }
      }
      CHECK(mismatches == 0);
    }
  }
}
