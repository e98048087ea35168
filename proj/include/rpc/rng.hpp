#pragma once

// Seeded random streams. Every random draw in the pipeline comes from a
// mt19937_64 substream derived from (seed, interval, phase), so intervals
// are self-contained and a serialized instance can be re-priced later
// without replaying generation. Uniform draws are hand-rolled (shift-based
// doubles, fixed-point integer scaling) so results do not depend on the
// standard library's unspecified distribution algorithms.

#include <cstdint>
#include <random>

namespace rpc {

enum class StreamPhase : std::uint32_t { kGeneration = 1, kPricing = 2 };

inline std::mt19937_64 substream(std::uint64_t seed, int interval, StreamPhase phase) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(interval), static_cast<std::uint32_t>(phase)};
  return std::mt19937_64(seq);
}

// Uniform double in [lo, hi).
inline double uniform_double(std::mt19937_64& g, double lo, double hi) {
  double u = static_cast<double>(g() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

// Uniform integer in [lo, hi] (inclusive).
inline std::int64_t uniform_int(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  unsigned __int128 span = static_cast<unsigned __int128>(hi - lo + 1);
  unsigned __int128 scaled = static_cast<unsigned __int128>(g()) * span;
  return lo + static_cast<std::int64_t>(scaled >> 64);
}

inline bool bernoulli(std::mt19937_64& g, double p) { return uniform_double(g, 0.0, 1.0) < p; }

}  // namespace rpc
