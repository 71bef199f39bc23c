#pragma once

#include <cstdint>
#include <random>

namespace tds {

/// Named sub-streams. Every random decision in the library draws from exactly
/// one of these, so e.g. changing s never perturbs the parent graph.
enum class Stream : std::uint64_t {
  parent_edges = 1,
  child_a_mask = 2,
  child_b_mask = 3,
  permutation = 4,
  unmatched_partner = 5,
  tail_samples = 6,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for sub-stream `stream` of master seed `seed`, optionally further
/// split by an index (trial number, instance number, ...).
constexpr std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                                    std::uint64_t index = 0) noexcept {
  return splitmix64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream))) + index);
}

/// 64-bit Mersenne Twister plus the two draws the library needs, defined
/// bit-for-bit here rather than through the implementation-defined standard
/// distributions.
class Rng {
 public:
  Rng(std::uint64_t seed, Stream stream, std::uint64_t index = 0)
      : engine_(derive_seed(seed, stream, index)) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling keeps it
  /// exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tds
