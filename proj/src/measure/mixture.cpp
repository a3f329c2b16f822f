#include "covermeasure/measure/mixture.hpp"

#include "covermeasure/graph/canonical.hpp"
#include "covermeasure/graph/enumerate.hpp"

namespace covermeasure {

SimplexBlock make_block(const TrivalentGraph& graph) {
  SymmetryData symmetry = symmetry_data(graph);
  SimplexBlock block;
  block.graph = std::make_shared<const TrivalentGraph>(graph);
  block.graph_id = graph_id(graph);
  block.aut_order = symmetry.aut_order;
  block.triv_order = symmetry.triv_order;
  block.edge_group = std::move(symmetry.edge_group);
  block.mass = Rational(BigInt(block.triv_order), BigInt(block.aut_order));
  return block;
}

const WeightedBlock* MeasureMixture::find(const std::string& graph_id) const {
  for (const auto& wb : blocks) {
    if (wb.block.graph_id == graph_id) return &wb;
  }
  return nullptr;
}

MeasureMixture build_limit_measure(int k) {
  MeasureMixture mixture;
  mixture.rank = k;
  Rational reciprocal_sum = 0;
  for (const auto& graph : enumerate_trivalent(k)) {
    WeightedBlock wb{make_block(graph), 0};
    reciprocal_sum += Rational(BigInt(1), BigInt(wb.block.aut_order));
    mixture.blocks.push_back(std::move(wb));
  }
  mixture.normalization = 1 / reciprocal_sum;
  for (auto& wb : mixture.blocks) {
    // weight = normalization * mass / |Triv| = normalization / |Aut|.
    wb.weight = mixture.normalization * wb.block.mass / Rational(BigInt(wb.block.triv_order));
  }
  return mixture;
}

}  // namespace covermeasure
