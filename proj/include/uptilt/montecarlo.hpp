#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "uptilt/geometry.hpp"
#include "uptilt/link_budget.hpp"

namespace uptilt {

/// Exact evaluates the full SINR expression. PaperApprox applies the neglections used by
/// the closed forms: outage iff the UAV is outside the serving beam; average SINR keeps
/// only the interference region without noise (Case 1) or only the interference-free
/// served region (Cases 2-5).
enum class McMode { Exact, PaperApprox };

McMode parse_mc_mode(std::string_view text);

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  McMode mode = McMode::Exact;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
};

/// Samples are drawn in fixed-size chunks; chunk c uses its own generator seeded from
/// (seed, c), and partial statistics are merged in chunk order. Results therefore do not
/// depend on the number of threads.
inline constexpr std::uint64_t kMcChunkSamples = 1 << 16;

/// Generator for chunk `chunk` of a run seeded with `seed`.
std::mt19937_64 make_chunk_stream(std::uint64_t seed, std::uint64_t chunk);

/// dx uniform on (0, d1/2], hx uniform on [h1, h2).
UavPosition sample_uav(std::mt19937_64& stream, const CorridorGeometry& geom);

McEstimate empirical_outage(const CorridorGeometry& geom, const BeamConfig& beam,
                            const RadioConfig& radio, const McConfig& mc);

McEstimate empirical_avg_sinr(const CorridorGeometry& geom, const BeamConfig& beam,
                              const RadioConfig& radio, const McConfig& mc);

/// Single-threaded reference implementations; bit-identical to the parallel versions.
namespace serial {

McEstimate empirical_outage(const CorridorGeometry& geom, const BeamConfig& beam,
                            const RadioConfig& radio, const McConfig& mc);

McEstimate empirical_avg_sinr(const CorridorGeometry& geom, const BeamConfig& beam,
                              const RadioConfig& radio, const McConfig& mc);

}  // namespace serial

}  // namespace uptilt
