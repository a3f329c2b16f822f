#include "covermeasure/measure/sampler.hpp"

#include <algorithm>

#include "covermeasure/core/error.hpp"
#include "covermeasure/simd/kernels.hpp"

namespace covermeasure {

namespace {

std::vector<double> cumulative_weights(const MeasureMixture& m) {
  if (m.blocks.empty()) throw Error(ErrorCode::InvalidArgument, "empty mixture");
  std::vector<double> cumulative;
  Rational running = 0;
  for (const auto& wb : m.blocks) {
    running += wb.weight;
    cumulative.push_back(to_double(running));
  }
  cumulative.back() = 1.0;
  return cumulative;
}

}  // namespace

std::vector<BlockRows> draw_chunk(const MeasureMixture& m, std::size_t rows, Rng& rng) {
  const auto cumulative = cumulative_weights(m);
  const std::size_t columns = static_cast<std::size_t>(m.blocks.front().block.edge_count());

  std::vector<std::size_t> choice(rows);
  std::vector<BlockRows> out(m.blocks.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const double u = rng.uniform_open();
    choice[i] = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end() - 1, u) -
                                         cumulative.begin());
    out[choice[i]].source_row.push_back(i);
  }
  std::vector<std::size_t> filled(m.blocks.size(), 0);
  for (auto& block : out) block.data.resize(block.rows() * columns);
  for (std::size_t i = 0; i < rows; ++i) {
    BlockRows& block = out[choice[i]];
    const std::size_t slot = filled[choice[i]]++;
    for (std::size_t c = 0; c < columns; ++c) block.data[c * block.rows() + slot] = rng.exponential();
  }
  const auto& kernels = simd::active_kernels();
  for (auto& block : out) {
    if (block.rows() > 0) kernels.normalize_rows(block.data.data(), columns, block.rows(), block.rows());
  }
  return out;
}

MetricGraph sample(const MeasureMixture& m, std::uint64_t seed) {
  Rng rng(seed);
  const auto chunk = draw_chunk(m, 1, rng);
  for (std::size_t b = 0; b < chunk.size(); ++b) {
    if (chunk[b].rows() == 1) return MetricGraph(m.blocks[b].block.graph, chunk[b].data);
  }
  throw Error(ErrorCode::InvalidArgument, "sampler produced no row");
}

std::vector<MetricGraph> sample_many(const MeasureMixture& m, std::size_t count, std::uint64_t seed,
                                     std::size_t chunk_size) {
  if (chunk_size == 0) throw Error(ErrorCode::InvalidArgument, "chunk size must be positive");
  std::vector<MetricGraph> points;
  points.reserve(count);
  for (std::size_t start = 0, j = 0; start < count; start += chunk_size, ++j) {
    const std::size_t rows = std::min(chunk_size, count - start);
    Rng rng(derive_stream_seed(seed, j));
    const auto chunk = draw_chunk(m, rows, rng);
    std::vector<const double*> row_data(rows);
    std::vector<std::size_t> row_block(rows), row_slot(rows);
    for (std::size_t b = 0; b < chunk.size(); ++b) {
      for (std::size_t slot = 0; slot < chunk[b].rows(); ++slot) {
        row_block[chunk[b].source_row[slot]] = b;
        row_slot[chunk[b].source_row[slot]] = slot;
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      const BlockRows& block = chunk[row_block[i]];
      const std::size_t columns = block.data.size() / block.rows();
      std::vector<double> lengths(columns);
      for (std::size_t c = 0; c < columns; ++c) lengths[c] = block.data[c * block.rows() + row_slot[i]];
      points.emplace_back(m.blocks[row_block[i]].block.graph, std::move(lengths));
    }
  }
  return points;
}

}  // namespace covermeasure
