#pragma once

#include <vector>

#include "covermeasure/graph/trivalent_graph.hpp"

namespace covermeasure {

inline constexpr int kDefaultMaxRank = 6;

/// Rank cap for enumeration: COVERMEASURE_MAX_RANK if set and valid,
/// otherwise kDefaultMaxRank.
int max_enumeration_rank();

/// One canonical representative per homeomorphism class of connected
/// trivalent multigraphs of rank k, sorted by canonical bytes.
///
/// Throws Error(InvalidRank) for k < 2 or k above `max_rank`.
std::vector<TrivalentGraph> enumerate_trivalent(int k, int max_rank);
std::vector<TrivalentGraph> enumerate_trivalent(int k);

}  // namespace covermeasure
