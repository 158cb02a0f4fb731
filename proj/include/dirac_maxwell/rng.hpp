#pragma once

// Seeded SplitMix64 streams. Each suite derives its own stream from
// (seed, suite name), so the order in which suites run never changes values.

#include <cstdint>
#include <string_view>

namespace dm {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Independent child stream keyed by a name.
  SplitMix64 split(std::string_view name) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char ch : name) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    SplitMix64 mix(state_ ^ h);
    return SplitMix64(mix.next());
  }

 private:
  std::uint64_t state_;
};

inline SplitMix64 suite_stream(std::uint64_t seed, std::string_view suite) {
  return SplitMix64(seed).split(suite);
}

}  // namespace dm
