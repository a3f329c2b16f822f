#pragma once

#include <memory>
#include <string>
#include <vector>

#include "covermeasure/core/rational.hpp"
#include "covermeasure/graph/automorphism.hpp"
#include "covermeasure/graph/trivalent_graph.hpp"

namespace covermeasure {

/// The folded simplex S_X of one graph type together with its symmetry
/// data. `mass` is |Triv(X)|/|Aut(X)|, the total sigma_X volume.
struct SimplexBlock {
  std::shared_ptr<const TrivalentGraph> graph;
  std::string graph_id;
  std::size_t aut_order = 0;
  std::size_t triv_order = 0;
  std::vector<EdgePermutation> edge_group;
  Rational mass;

  int dimension() const { return graph->edge_count() - 1; }
  int edge_count() const { return graph->edge_count(); }
};

SimplexBlock make_block(const TrivalentGraph& graph);

struct WeightedBlock {
  SimplexBlock block;
  /// Probability of the block under m_k: (1/|Aut X|) / sum (1/|Aut X'|).
  Rational weight;
};

/// The limit measure m_k as a mixture of uniform laws on the blocks.
struct MeasureMixture {
  int rank = 0;
  std::vector<WeightedBlock> blocks;
  /// 1 / sum_X 1/|Aut X|, the factor in front of sum_X sigma_X/|Triv X|.
  Rational normalization;

  /// sum_X 1/|Aut X|.
  Rational aut_reciprocal_sum() const { return 1 / normalization; }
  const WeightedBlock* find(const std::string& graph_id) const;
};

/// Builds m_k from enumerate_trivalent(k). Exact rational weights.
MeasureMixture build_limit_measure(int k);

}  // namespace covermeasure
