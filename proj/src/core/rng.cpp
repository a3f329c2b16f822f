#include "covermeasure/core/rng.hpp"

#include <cmath>

namespace covermeasure {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  return splitmix64(splitmix64(seed) ^ (0xD1B54A32D192ED03ULL * (chunk + 1)));
}

double Rng::exponential() noexcept { return -std::log(uniform_open()); }

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  // Rejection to avoid modulo bias.
  const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - bound + 1) % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

}  // namespace covermeasure
