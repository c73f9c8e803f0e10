#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

namespace kout {

/// Master seed for one reproducible random computation.
struct Seed {
  std::uint64_t master = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// SplitMix64 finalizer (Stafford variant 13). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Folds a sequence of words into a seed. Each word is added to the running
/// state together with the golden-ratio increment and the state is passed
/// through mix64, so the result depends on every word and on their order.
constexpr Seed derive_seed(Seed base, std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = mix64(base.master ^ 0x6a09e667f3bcc909ULL);
  for (std::uint64_t w : words) {
    h = mix64(h + 0x9e3779b97f4a7c15ULL + w);
  }
  return Seed{h};
}

/// xoshiro256** 1.0 (Blackman & Vigna), state expanded from a single
/// 64-bit seed with SplitMix64. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(Seed seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection,
  /// so the result is exactly uniform. bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept;

 private:
  std::uint64_t s_[4];
};

/// Exactly uniform `count`-subset of {0, ..., universe - 1}, returned sorted.
/// Robert Floyd's algorithm: `count` draws, no rejection loop.
/// Requires count <= universe.
std::vector<std::uint32_t> sample_subset(Rng& rng, std::uint32_t universe,
                                         std::uint32_t count);

}  // namespace kout
