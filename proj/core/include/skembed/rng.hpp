#ifndef SKEMBED_RNG_HPP
#define SKEMBED_RNG_HPP

#include <cstdint>
#include <random>

namespace skembed {

// SplitMix64 step; used to decorrelate per-path seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent engine for path `index` under a run-level seed. Streams depend
// only on (seed, index), so merged results are identical however the paths
// are scheduled.
inline std::mt19937_64 path_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (index + 1)));
}

}  // namespace skembed

#endif  // SKEMBED_RNG_HPP
