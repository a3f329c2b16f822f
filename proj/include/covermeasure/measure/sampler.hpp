#pragma once

#include <cstdint>
#include <vector>

#include "covermeasure/core/rng.hpp"
#include "covermeasure/measure/metric_graph.hpp"
#include "covermeasure/measure/mixture.hpp"

namespace covermeasure {

inline constexpr std::size_t kDefaultChunkSize = std::size_t{1} << 16;

/// Rows drawn for one block within a chunk, stored column-major with
/// stride `rows()`: length of edge c in row i is data[c * rows() + i].
struct BlockRows {
  std::vector<double> data;
  /// Row index within the chunk for each stored row.
  std::vector<std::size_t> source_row;

  std::size_t rows() const { return source_row.size(); }
};

/// Draws `rows` points of m_k from `rng`: all block choices first, then E
/// standard exponentials per row in row order, normalized to sum one with
/// the active SIMD kernel. Returns one BlockRows per mixture block.
std::vector<BlockRows> draw_chunk(const MeasureMixture& m, std::size_t rows, Rng& rng);

/// One point of m_k: block chosen with its weight, lengths uniform on the
/// open simplex.
MetricGraph sample(const MeasureMixture& m, std::uint64_t seed);

/// `count` points using the same chunked streams as integrate_mc: chunk j
/// draws from Rng(derive_stream_seed(seed, j)).
std::vector<MetricGraph> sample_many(const MeasureMixture& m, std::size_t count, std::uint64_t seed,
                                     std::size_t chunk_size = kDefaultChunkSize);

}  // namespace covermeasure
