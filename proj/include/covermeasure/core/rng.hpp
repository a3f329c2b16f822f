#pragma once

#include <cstdint>
#include <random>

namespace covermeasure {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for chunk `chunk` of a computation seeded with `seed`. Fixed rule so
/// a given (seed, chunk layout) always reproduces the same streams.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t chunk) noexcept;

/// mt19937_64 plus the two variates the library needs. Both are defined
/// bit-for-bit from the engine output rather than via std distributions,
/// whose algorithms differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform on the open interval (0, 1).
  double uniform_open() noexcept {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard exponential, strictly positive.
  double exponential() noexcept;

  std::uint64_t bits() noexcept { return engine_(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::mt19937_64 engine_;
};

}  // namespace covermeasure
