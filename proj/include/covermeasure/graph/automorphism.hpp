#pragma once

#include <vector>

#include "covermeasure/graph/trivalent_graph.hpp"

namespace covermeasure {

/// A permutation of edges: `image[e]` is where edge e is sent.
using EdgePermutation = std::vector<int>;

/// Dart-level symmetry of a TrivalentGraph: commutes with the pairing and
/// maps the darts of each vertex onto the darts of a single vertex. Loop
/// reversal is a nontrivial automorphism under this definition.
struct GraphAutomorphism {
  std::vector<int> dart_permutation;

  int operator()(int dart) const { return dart_permutation[dart]; }

  /// `this` after `first`: d -> (*this)(first(d)).
  GraphAutomorphism after(const GraphAutomorphism& first) const;
  GraphAutomorphism inverse() const;
  EdgePermutation edge_permutation(const TrivalentGraph& graph) const;
  std::vector<int> vertex_permutation(const TrivalentGraph& graph) const;
  bool is_automorphism_of(const TrivalentGraph& graph) const;

  friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
  friend auto operator<=>(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

/// The full automorphism group, sorted, identity first.
std::vector<GraphAutomorphism> automorphism_group(const TrivalentGraph& graph);

/// Automorphisms whose induced edge permutation is the identity (edge
/// reversals allowed).
std::vector<GraphAutomorphism> triv_subgroup(const TrivalentGraph& graph);

/// Distinct edge permutations induced by Aut(X), sorted, identity first.
/// Its size is |Aut(X)| / |Triv(X)|.
std::vector<EdgePermutation> edge_action(const TrivalentGraph& graph);

/// Cached group data for a graph: the orders used everywhere downstream.
struct SymmetryData {
  std::size_t aut_order = 0;
  std::size_t triv_order = 0;
  std::vector<EdgePermutation> edge_group;
};

SymmetryData symmetry_data(const TrivalentGraph& graph);

}  // namespace covermeasure
