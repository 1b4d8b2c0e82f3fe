#ifndef STABLEAGG_RNG_HPP
#define STABLEAGG_RNG_HPP

#include <cstdint>
#include <cmath>
#include <random>

namespace stableagg {

/// Seedable, splittable random generator. The sequence is fully determined by
/// (seed, stream): the mt19937_64 engine is seeded with a splitmix64 hash of
/// the pair, so disjoint stream indices give independent substreams that can
/// be consumed in parallel.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(mix(seed, stream)) {}

  /// Uniform draw on the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard exponential draw.
  double exponential() { return -std::log(uniform01()); }

 private:
  static std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64(s);
    s ^= 0x9E3779B97F4A7C15ull * (stream + 1);
    return h ^ splitmix64(s);
  }

  std::mt19937_64 engine_;
};

}  // namespace stableagg

#endif  // STABLEAGG_RNG_HPP
