#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "uptilt/errors.hpp"
#include "uptilt/geometry.hpp"
#include "uptilt/montecarlo.hpp"
#include "uptilt/quadrature.hpp"
#include "uptilt/units.hpp"

using namespace uptilt;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
const CorridorGeometry kDefault(1000.0, 100.0, 300.0);

BeamConfig beam_deg(double alpha, double beta) {
  return BeamConfig(deg_to_rad(alpha), deg_to_rad(beta), 1.0);
}

}  // namespace

TEST_CASE("corridor and beam validation") {
  CHECK_THROWS_AS(CorridorGeometry(0.0, 100.0, 300.0), InvalidInput);
  CHECK_THROWS_AS(CorridorGeometry(1000.0, 0.0, 300.0), InvalidInput);
  CHECK_THROWS_AS(CorridorGeometry(1000.0, 300.0, 300.0), InvalidInput);
  CHECK_THROWS_AS(BeamConfig(0.0, 0.5, 1.0), InvalidInput);
  CHECK_THROWS_AS(beam_deg(50.0, 40.0), InvalidInput);
  CHECK_THROWS_AS(BeamConfig(0.1, -0.1, 1.0), InvalidInput);
  CHECK_THROWS_AS(BeamConfig(0.1, 0.1, 0.0), InvalidInput);
  CHECK(BeamConfig::feasible(deg_to_rad(39.9), deg_to_rad(50.0)));
  CHECK_FALSE(BeamConfig::feasible(deg_to_rad(40.0), deg_to_rad(50.0)));
}

TEST_CASE("elevation angles") {
  auto a = elevation_angles({500.0, 500.0}, kDefault);
  CHECK(a.theta1 == Approx(kPi / 4).epsilon(1e-15));
  CHECK(a.theta2 == Approx(kPi / 4).epsilon(1e-15));

  a = elevation_angles({250.0, 100.0}, kDefault);
  CHECK(a.theta1 == Approx(0.380506377112364886).epsilon(1e-14));
  CHECK(a.theta2 == Approx(0.132551532296674021).epsilon(1e-14));

  a = elevation_angles({100.0, 100.0}, kDefault);
  CHECK(a.theta1 == Approx(kPi / 4).epsilon(1e-15));
  CHECK(a.theta2 == Approx(0.110657221173895647).epsilon(1e-14));

  CHECK_THROWS_AS(elevation_angles({0.0, 100.0}, kDefault), InvalidInput);
  CHECK_THROWS_AS(elevation_angles({500.1, 100.0}, kDefault), InvalidInput);
}

TEST_CASE("elevation angles are monotone") {
  double prev = 0.0;
  for (double hx = 100.0; hx <= 300.0; hx += 5.0) {
    const double t = elevation_angles({200.0, hx}, kDefault).theta1;
    CHECK(t > prev);
    prev = t;
  }
  prev = kPi;
  for (double dx = 1.0; dx <= 500.0; dx += 7.0) {
    const auto a = elevation_angles({dx, 150.0}, kDefault);
    CHECK(a.theta1 < prev);
    CHECK(a.theta1 >= a.theta2);
    prev = a.theta1;
  }
}

TEST_CASE("theta1 domain and density") {
  auto d = theta1_domain(500.0, CorridorGeometry(1000.0, 100.0, 500.0));
  CHECK(d.lo == Approx(kPi / 4).epsilon(1e-15));
  CHECK(d.hi == Approx(kPi / 2).epsilon(1e-15));
  CHECK(theta1_domain(100.0, kDefault).lo == Approx(0.197395559849880769).epsilon(1e-14));
  CHECK(theta1_domain(300.0, kDefault).lo == Approx(0.540419500270584139).epsilon(1e-14));
  CHECK_THROWS_AS(theta1_domain(99.0, kDefault), InvalidInput);

  CHECK(theta1_pdf(kPi / 4, 100.0, kDefault) == Approx(0.4).epsilon(1e-14));
  CHECK(theta1_pdf(0.1, 100.0, kDefault) == 0.0);

  for (double hx : {100.0, 137.0, 222.2, 300.0}) {
    const auto dom = theta1_domain(hx, kDefault);
    const Integral mass =
        integrate([&](double t) { return theta1_pdf(t, hx, kDefault); }, dom.lo, dom.hi);
    CHECK(mass.value == Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("theta1 density matches the histogram of sampled angles") {
  // dx uniform on (0, d1/2] at fixed hx; 50 bins over the support, 3 sigma per bin.
  const double hx = 200.0;
  const auto dom = theta1_domain(hx, kDefault);
  constexpr int kBins = 50;
  constexpr int kSamples = 1'000'000;
  std::array<int, kBins> counts{};
  std::mt19937_64 rng = make_chunk_stream(2024, 0);
  const double width = (dom.hi - dom.lo) / kBins;
  for (int i = 0; i < kSamples; ++i) {
    const UavPosition pos = sample_uav(rng, kDefault);
    const double t = std::atan(hx / pos.dx);
    const int bin = std::min(kBins - 1, static_cast<int>((t - dom.lo) / width));
    ++counts[static_cast<std::size_t>(bin)];
  }
  for (int b = 0; b < kBins; ++b) {
    const double lo = dom.lo + b * width;
    const double p = integrate([&](double t) { return theta1_pdf(t, hx, kDefault); }, lo, lo + width)
                         .value;
    const double expected = p * kSamples;
    const double sigma = std::sqrt(kSamples * p * (1.0 - p));
    CHECK(std::abs(counts[static_cast<std::size_t>(b)] - expected) <= 3.0 * sigma);
  }
}

TEST_CASE("crossing heights") {
  auto h = crossing_heights(kDefault, beam_deg(45.0, 10.0));
  CHECK(h.h3 == Approx(500.0).epsilon(1e-14));
  h = crossing_heights(kDefault, beam_deg(30.0, 30.0));
  CHECK(h.h3 == Approx(500.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(h.h4 == Approx(250.0 * std::sqrt(3.0)).epsilon(1e-14));
  h = crossing_heights(kDefault, beam_deg(10.0, 50.0));
  CHECK(h.h3 == Approx(88.1634903542324867).epsilon(1e-13));
  CHECK(h.h4 == Approx(160.035026192567553).epsilon(1e-13));
  CHECK(h.h4 > h.h3);

  // At the cell edge the serving lower edge sits at height h3.
  const BeamConfig beam = beam_deg(17.0, 20.0);
  const double edge_height = kDefault.half_spacing() * std::tan(beam.alpha());
  CHECK(std::abs(edge_height - crossing_heights(kDefault, beam).h3) <= 1e-9 * kDefault.d1());
}

TEST_CASE("classify_case examples") {
  CHECK(classify_case(kDefault, beam_deg(5.0, 50.0)) == CaseId::Case1);
  CHECK(classify_case(kDefault, beam_deg(10.0, 50.0)) == CaseId::Case2);
  CHECK(classify_case(kDefault, beam_deg(20.0, 30.0)) == CaseId::Case3);
  CHECK(classify_case(kDefault, beam_deg(20.0, 50.0)) == CaseId::Case4);
  CHECK(classify_case(kDefault, beam_deg(35.0, 30.0)) == CaseId::Case5);
  CHECK(to_string(CaseId::Case3) == "case3");
}

TEST_CASE("classify_case ties go to the higher case") {
  const BeamConfig beam = beam_deg(20.0, 30.0);
  const auto h = crossing_heights(kDefault, beam);
  CHECK(classify_case(CorridorGeometry(1000.0, 50.0, h.h3), beam) == CaseId::Case5);
  CHECK(classify_case(CorridorGeometry(1000.0, h.h3, 400.0), beam) == CaseId::Case3);
  CHECK(classify_case(CorridorGeometry(1000.0, h.h3, h.h4), beam) == CaseId::Case4);
  const BeamConfig low = beam_deg(5.0, 50.0);
  const auto hl = crossing_heights(kDefault, low);
  CHECK(classify_case(CorridorGeometry(1000.0, hl.h4, 300.0), low) == CaseId::Case2);
}

TEST_CASE("classify_case boundaries sit where h3 or h4 meets h1 or h2") {
  for (double beta_deg : {10.0, 30.0, 50.0, 70.0}) {
    const double beta = deg_to_rad(beta_deg);
    const double step = deg_to_rad(0.05);
    double prev_alpha = step;
    CaseId prev = classify_case(kDefault, BeamConfig(prev_alpha, beta, 1.0));
    for (double alpha = 2 * step; alpha + beta < kPi / 2 - step; alpha += step) {
      const CaseId now = classify_case(kDefault, BeamConfig(alpha, beta, 1.0));
      CHECK(static_cast<int>(now) >= static_cast<int>(prev));
      if (now != prev) {
        double lo = prev_alpha;
        double hi = alpha;
        for (int i = 0; i < 60; ++i) {
          const double mid = 0.5 * (lo + hi);
          (classify_case(kDefault, BeamConfig(mid, beta, 1.0)) == prev ? lo : hi) = mid;
        }
        const auto h = crossing_heights(kDefault, BeamConfig(0.5 * (lo + hi), beta, 1.0));
        const double gap = std::min({std::abs(h.h3 - kDefault.h1()), std::abs(h.h3 - kDefault.h2()),
                                     std::abs(h.h4 - kDefault.h1()), std::abs(h.h4 - kDefault.h2())});
        CHECK(gap < 1e-6);
      }
      prev = now;
      prev_alpha = alpha;
    }
  }
}

TEST_CASE("gamma angle") {
  const BeamConfig beam = beam_deg(30.0, 20.0);
  const double h3 = crossing_heights(kDefault, beam).h3;
  CHECK(gamma_angle(h3, kDefault, beam).value() == Approx(beam.alpha()).epsilon(1e-12));
  CHECK(gamma_angle(200.0, kDefault, beam).value() ==
        Approx(0.296954362856839234).epsilon(1e-13));
  CHECK_FALSE(gamma_angle(100.0, kDefault, beam_deg(5.0, 20.0)).has_value());
}

TEST_CASE("slant ranges") {
  auto r = slant_ranges(100.0, kPi / 2, kPi / 2);
  CHECK(r.r1 == Approx(100.0));
  CHECK(r.r2 == Approx(100.0));
  const auto a = elevation_angles({100.0, 100.0}, kDefault);
  r = slant_ranges(100.0, a.theta1, a.theta2);
  CHECK(r.r1 == Approx(141.421356237309505).epsilon(1e-14));
  CHECK(r.r2 == Approx(905.538513813741663).epsilon(1e-13));
  r = slant_ranges(288.675134594812882, deg_to_rad(30.0), deg_to_rad(30.0));
  CHECK(r.r1 == Approx(577.350269189625765).epsilon(1e-13));
  CHECK(r.r1 == r.r2);
}
