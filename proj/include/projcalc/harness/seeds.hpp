#pragma once

#include <cstdint>
#include <random>

namespace projcalc::harness {

// SplitMix64 finalizer; the increment is the 64-bit golden-ratio constant.
inline constexpr std::uint64_t kSeedIncrement = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += kSeedIncrement;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// child = splitmix64(splitmix64(splitmix64(seed) ^ dim) ^ trial)
constexpr std::uint64_t child_seed(std::uint64_t seed, std::uint64_t dim, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(seed) ^ dim) ^ trial);
}

// Fixture k of a dimension uses trial coordinate kFixtureTrialBase + k.
inline constexpr std::uint64_t kFixtureTrialBase = 1ULL << 32;

// Engine plus distributions written out explicitly so that draws do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  // Uniform in (0, 1].
  double uniform01() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }

  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace projcalc::harness
