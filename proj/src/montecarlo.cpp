#include "uptilt/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "uptilt/errors.hpp"

namespace uptilt {

namespace {

struct RunningStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const RunningStats& other) noexcept {
    if (other.n == 0) {
      return;
    }
    if (n == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(other.n);
    const double total = na + nb;
    const double delta = other.mean - mean;
    mean += delta * nb / total;
    m2 += other.m2 + delta * delta * na * nb / total;
    n += other.n;
  }

  McEstimate estimate() const noexcept {
    const double variance = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    return {mean, std::sqrt(variance / static_cast<double>(n)), n};
  }
};

double unit_uniform(std::mt19937_64& stream) {
  return static_cast<double>(stream() >> 11) * 0x1.0p-53;
}

template <typename SampleFn>
RunningStats run_chunk(const CorridorGeometry& geom, const McConfig& mc, std::uint64_t chunk,
                       const SampleFn& value) {
  std::mt19937_64 stream = make_chunk_stream(mc.seed, chunk);
  const std::uint64_t first = chunk * kMcChunkSamples;
  const std::uint64_t count = std::min(kMcChunkSamples, mc.samples - first);
  RunningStats stats;
  for (std::uint64_t i = 0; i < count; ++i) {
    const UavPosition pos = sample_uav(stream, geom);
    stats.add(value(pos.dx, pos.hx));
  }
  return stats;
}

std::uint64_t chunk_count(const McConfig& mc) {
  if (mc.samples == 0) {
    throw InvalidInput("monte carlo: samples must be at least 1");
  }
  return (mc.samples + kMcChunkSamples - 1) / kMcChunkSamples;
}

template <typename SampleFn>
McEstimate estimate_serial(const CorridorGeometry& geom, const McConfig& mc, const SampleFn& value) {
  const std::uint64_t chunks = chunk_count(mc);
  RunningStats total;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    total.merge(run_chunk(geom, mc, c, value));
  }
  return total.estimate();
}

template <typename SampleFn>
McEstimate estimate_parallel(const CorridorGeometry& geom, const McConfig& mc,
                             const SampleFn& value) {
  const std::uint64_t chunks = chunk_count(mc);
  std::vector<RunningStats> partial(chunks);
  const auto n = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n; ++c) {
    partial[static_cast<std::size_t>(c)] = run_chunk(geom, mc, static_cast<std::uint64_t>(c), value);
  }
  RunningStats total;
  for (const RunningStats& p : partial) {
    total.merge(p);
  }
  return total.estimate();
}

auto outage_indicator(const LinkEvaluator& link, McMode mode) {
  return [&link, mode](double dx, double hx) {
    if (mode == McMode::PaperApprox) {
      return link.terms(dx, hx).served ? 0.0 : 1.0;
    }
    return link.sinr(dx, hx) < link.threshold() ? 1.0 : 0.0;
  };
}

auto sinr_sample(const LinkEvaluator& link, McMode mode, CaseId id) {
  return [&link, mode, id](double dx, double hx) {
    if (mode == McMode::Exact) {
      return link.sinr(dx, hx);
    }
    const LinkEvaluator::Terms t = link.terms(dx, hx);
    if (id == CaseId::Case1) {
      return t.served && t.interfered ? t.signal / t.interference : 0.0;
    }
    return t.served && !t.interfered ? t.signal / link.noise_power() : 0.0;
  };
}

}  // namespace

McMode parse_mc_mode(std::string_view text) {
  if (text == "exact") {
    return McMode::Exact;
  }
  if (text == "paper") {
    return McMode::PaperApprox;
  }
  throw InvalidInput("unknown monte carlo mode '" + std::string(text) + "' (expected exact or paper)");
}

std::mt19937_64 make_chunk_stream(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

UavPosition sample_uav(std::mt19937_64& stream, const CorridorGeometry& geom) {
  const double u = unit_uniform(stream);
  const double v = unit_uniform(stream);
  return {(1.0 - u) * geom.half_spacing(), geom.h1() + v * (geom.h2() - geom.h1())};
}

McEstimate empirical_outage(const CorridorGeometry& geom, const BeamConfig& beam,
                            const RadioConfig& radio, const McConfig& mc) {
  const LinkEvaluator link(geom, beam, radio);
  return estimate_parallel(geom, mc, outage_indicator(link, mc.mode));
}

McEstimate empirical_avg_sinr(const CorridorGeometry& geom, const BeamConfig& beam,
                              const RadioConfig& radio, const McConfig& mc) {
  const LinkEvaluator link(geom, beam, radio);
  return estimate_parallel(geom, mc, sinr_sample(link, mc.mode, classify_case(geom, beam)));
}

namespace serial {

McEstimate empirical_outage(const CorridorGeometry& geom, const BeamConfig& beam,
                            const RadioConfig& radio, const McConfig& mc) {
  const LinkEvaluator link(geom, beam, radio);
  return estimate_serial(geom, mc, outage_indicator(link, mc.mode));
}

McEstimate empirical_avg_sinr(const CorridorGeometry& geom, const BeamConfig& beam,
                              const RadioConfig& radio, const McConfig& mc) {
  const LinkEvaluator link(geom, beam, radio);
  return estimate_serial(geom, mc, sinr_sample(link, mc.mode, classify_case(geom, beam)));
}

}  // namespace serial

}  // namespace uptilt
