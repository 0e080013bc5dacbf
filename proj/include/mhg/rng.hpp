#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mhg {

// Counter-based splittable RNG. Every draw is a pure function of
// (seed, stream, counter), so noise is reproducible and independent of
// evaluation order. Streams are usually derived from a name via fnv1a64.

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t rng_u64(std::uint64_t seed, std::uint64_t stream,
                                       std::uint64_t counter) {
  return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

// Uniform in [0, 1), 53-bit resolution.
inline double rng_uniform(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t counter) {
  return static_cast<double>(rng_u64(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; consumes counters 2c and 2c+1.
inline double rng_gaussian(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
  double u1 = rng_uniform(seed, stream, 2 * counter);
  double u2 = rng_uniform(seed, stream, 2 * counter + 1);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

// Stateful convenience wrapper over the counter RNG.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t counter = 0;

  RngStream(std::uint64_t seed_, std::string_view name)
      : seed(seed_), stream(fnv1a64(name)) {}
  RngStream(std::uint64_t seed_, std::uint64_t stream_)
      : seed(seed_), stream(stream_) {}

  std::uint64_t next_u64() { return rng_u64(seed, stream, counter++); }
  double next_uniform() { return rng_uniform(seed, stream, counter++); }
  double next_gaussian() { return rng_gaussian(seed, stream, counter++); }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }
};

}  // namespace mhg
