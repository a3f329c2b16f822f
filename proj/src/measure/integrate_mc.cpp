#include "covermeasure/measure/integrate_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include "covermeasure/core/error.hpp"
#include "covermeasure/simd/kernels.hpp"

namespace covermeasure {

namespace {

// A piecewise-linear functional in the layout the kernel expects.
struct DenseForms {
  std::vector<double> coefficients;
  std::vector<double> constants;
};

struct ChunkTotals {
  double sum = 0;
  double squares = 0;
  std::vector<std::size_t> block_counts;
};

}  // namespace

McResult integrate_mc(const MeasureMixture& m, const Functional& f, std::size_t n, std::uint64_t seed,
                      std::size_t chunk_size, unsigned threads) {
  if (n < 2) throw Error(ErrorCode::InvalidSampleCount, "Monte Carlo needs at least 2 samples");
  if (chunk_size == 0) throw Error(ErrorCode::InvalidArgument, "chunk size must be positive");
  if (!f.evaluate && !f.piecewise_linear) throw Error(ErrorCode::InvalidArgument, "functional has no evaluator");

  std::vector<std::optional<DenseForms>> dense(m.blocks.size());
  if (f.piecewise_linear) {
    for (std::size_t b = 0; b < m.blocks.size(); ++b) {
      DenseForms d;
      for (const auto& form : f.piecewise_linear(*m.blocks[b].block.graph).forms) {
        for (const auto& c : form.coefficients) d.coefficients.push_back(to_double(c));
        d.constants.push_back(to_double(form.constant));
      }
      dense[b] = std::move(d);
    }
  }

  const auto& kernels = simd::active_kernels();
  const std::size_t chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<ChunkTotals> totals(chunks);

  auto run_chunk = [&](std::size_t j) {
    const std::size_t rows = std::min(chunk_size, n - j * chunk_size);
    Rng rng(derive_stream_seed(seed, j));
    const auto chunk = draw_chunk(m, rows, rng);
    ChunkTotals& t = totals[j];
    std::vector<double> values;
    for (std::size_t b = 0; b < chunk.size(); ++b) {
      const BlockRows& block = chunk[b];
      t.block_counts.push_back(block.rows());
      if (block.rows() == 0) continue;
      const std::size_t columns = block.data.size() / block.rows();
      values.assign(block.rows(), 0.0);
      if (dense[b]) {
        kernels.min_affine_forms(block.data.data(), columns, block.rows(), block.rows(),
                                 dense[b]->coefficients.data(), dense[b]->constants.data(),
                                 dense[b]->constants.size(), values.data());
      } else {
        const TrivalentGraph& graph = *m.blocks[b].block.graph;
        std::vector<double> lengths(columns);
        for (std::size_t i = 0; i < block.rows(); ++i) {
          for (std::size_t c = 0; c < columns; ++c) lengths[c] = block.data[c * block.rows() + i];
          values[i] = f.evaluate(graph, lengths);
        }
      }
      double s = 0, q = 0;
      kernels.sum_and_squares(values.data(), values.size(), &s, &q);
      t.sum += s;
      t.squares += q;
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
  if (workers <= 1) {
    for (std::size_t j = 0; j < chunks; ++j) run_chunk(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t j = next++; j < chunks; j = next++) run_chunk(j);
        } catch (...) {
          failures[w] = std::current_exception();
          next = chunks;
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  McResult result;
  result.samples = n;
  result.block_counts.assign(m.blocks.size(), 0);
  double sum = 0, squares = 0;
  for (const auto& t : totals) {
    sum += t.sum;
    squares += t.squares;
    for (std::size_t b = 0; b < t.block_counts.size(); ++b) result.block_counts[b] += t.block_counts[b];
  }
  const double count = static_cast<double>(n);
  result.estimate = sum / count;
  const double variance = std::max(0.0, (squares - count * result.estimate * result.estimate) / (count - 1));
  result.standard_error = std::sqrt(variance / count);
  return result;
}

}  // namespace covermeasure
