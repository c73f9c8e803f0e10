#include "koutgraph/rng.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace kout {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

Rng::Rng(Seed seed) noexcept {
  std::uint64_t x = seed.master;
  for (auto& word : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    word = mix64(x);
  }
}

Rng::result_type Rng::operator()() noexcept {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  assert(bound > 0);
  u128 m = static_cast<u128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::uniform01() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::vector<std::uint32_t> sample_subset(Rng& rng, std::uint32_t universe,
                                         std::uint32_t count) {
  assert(count <= universe);
  std::vector<std::uint32_t> chosen;
  chosen.reserve(count);
  // Small samples: linear membership scan beats a marker array.
  if (count <= 32) {
    for (std::uint32_t j = universe - count; j < universe; ++j) {
      const auto t = static_cast<std::uint32_t>(rng.below(std::uint64_t{j} + 1));
      const bool seen = std::find(chosen.begin(), chosen.end(), t) != chosen.end();
      chosen.push_back(seen ? j : t);
    }
  } else {
    std::vector<char> marked(universe, 0);
    for (std::uint32_t j = universe - count; j < universe; ++j) {
      auto t = static_cast<std::uint32_t>(rng.below(std::uint64_t{j} + 1));
      if (marked[t]) t = j;
      marked[t] = 1;
      chosen.push_back(t);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace kout
