#pragma once

#include <cmath>
#include <cstdint>

namespace cellsched {

// Counter-based stream RNG. Every consumer derives its own stream seed by
// hashing a key tuple (seed, drop, tag, indices...), so draws never depend
// on the order in which (user, cell) loops are visited.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform double in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform double in (0, 1], safe as a log() argument
  double uniform_pos() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  // unbiased integer in [0, n), n >= 1
  std::uint64_t below(std::uint64_t n) {
    // Lemire's multiply-with-rejection
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t threshold = -n % n;
      while (lo < threshold) {
        x = next();
        m = static_cast<unsigned __int128>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // pair of independent standard normals (Box-Muller)
  void gaussian_pair(double& z0, double& z1) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  // extra avalanche so nearby tuples land in unrelated streams
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

template <typename... Rest>
std::uint64_t stream_seed(std::uint64_t first, Rest... rest) {
  std::uint64_t h = hash_mix(0x243f6a8885a308d3ULL, first);
  ((h = hash_mix(h, static_cast<std::uint64_t>(rest))), ...);
  return h;
}

}  // namespace cellsched
