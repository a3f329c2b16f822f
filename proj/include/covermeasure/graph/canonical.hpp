#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "covermeasure/graph/trivalent_graph.hpp"

namespace covermeasure {

/// Isomorphism-invariant byte encoding of a trivalent graph.
///
/// Layout: rank, vertex count, then the column-wise upper triangle
/// (diagonal included) of the vertex multiplicity matrix under the
/// lexicographically smallest admissible vertex order. Used for
/// deduplication and as the on-disk / command-line graph identifier.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  /// `order[i]` is the original vertex placed at canonical position i.
  std::vector<int> order;

  std::string hex() const;
};

CanonicalForm canonical_form(const TrivalentGraph& graph);

/// Lowercase hex of `canonical_form(graph).bytes`.
std::string graph_id(const TrivalentGraph& graph);

/// The representative with vertices in canonical order: loops first (by
/// vertex), then non-loop edges in lexicographic order of endpoints.
TrivalentGraph canonical_graph(const TrivalentGraph& graph);

/// Inverse of `graph_id` for well-formed identifiers.
TrivalentGraph graph_from_id(std::string_view hex_id);

/// "dumbbell", "theta", "K4" for those types, otherwise empty.
std::string common_name(const TrivalentGraph& graph);

bool isomorphic(const TrivalentGraph& a, const TrivalentGraph& b);

}  // namespace covermeasure
