#pragma once

#include <cstdint>
#include <vector>

#include "covermeasure/measure/functional.hpp"
#include "covermeasure/measure/mixture.hpp"
#include "covermeasure/measure/sampler.hpp"

namespace covermeasure {

struct McResult {
  double estimate = 0;
  double standard_error = 0;
  std::size_t samples = 0;
  /// Number of draws that landed in each mixture block.
  std::vector<std::size_t> block_counts;
};

/// Sample mean and standard error of f over n draws of m_k. Chunk j uses
/// Rng(derive_stream_seed(seed, j)); chunk sums are combined in chunk
/// order, so the result depends only on (seed, n, chunk_size), never on
/// `threads` (0 picks the hardware concurrency).
///
/// Throws Error(InvalidSampleCount) for n < 2.
McResult integrate_mc(const MeasureMixture& m, const Functional& f, std::size_t n, std::uint64_t seed,
                      std::size_t chunk_size = kDefaultChunkSize, unsigned threads = 0);

}  // namespace covermeasure
