#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace h2df {

// splitmix64, used for seeding and stream derivation.
inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// xoshiro256** by Blackman & Vigna. Deterministic across platforms; we avoid
// std::uniform_*_distribution because its output is implementation-defined.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(uint64_t seed = 0) { reseed(seed); }

  void reseed(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64_next(sm);
    have_cached_normal_ = false;
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased integer in [0, n) via bitmask rejection.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t mask = mask_for(n - 1);
    uint64_t v;
    do {
      v = next() & mask;
    } while (v >= n);
    return v;
  }

  // Uniform in [0, 1) with 53 random bits.
  double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; caches the second deviate.
  double normal() {
    if (have_cached_normal_) {
      have_cached_normal_ = false;
      return cached_normal_;
    }
    double u1 = real01();
    while (u1 <= 0.0) u1 = real01();
    const double u2 = real01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(a);
    have_cached_normal_ = true;
    return r * std::cos(a);
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  static constexpr uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static constexpr uint64_t mask_for(uint64_t v) {
    uint64_t m = v;
    m |= m >> 1;
    m |= m >> 2;
    m |= m >> 4;
    m |= m >> 8;
    m |= m >> 16;
    m |= m >> 32;
    return m;
  }

  uint64_t s_[4];
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

// Independent substream for (root seed, stream index). Trial i of a Monte
// Carlo run always sees the same stream no matter how trials are partitioned
// across workers.
inline Xoshiro256ss derive_stream(uint64_t root_seed, uint64_t index) {
  uint64_t sm = root_seed;
  const uint64_t a = splitmix64_next(sm);
  sm = index ^ 0xd1b54a32d192ed03ull;
  const uint64_t b = splitmix64_next(sm);
  return Xoshiro256ss(a ^ (b * 0x9e3779b97f4a7c15ull));
}

}  // namespace h2df
