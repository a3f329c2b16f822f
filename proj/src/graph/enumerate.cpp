#include "covermeasure/graph/enumerate.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "covermeasure/core/error.hpp"
#include "covermeasure/graph/canonical.hpp"

namespace covermeasure {

namespace {

std::vector<EdgeEnds> edge_list(const TrivalentGraph& g) {
  std::vector<EdgeEnds> edges;
  for (int e = 0; e < g.edge_count(); ++e) edges.push_back(g.endpoints(e));
  return edges;
}

// Rank k+1 graphs from a rank k graph. Every connected cubic multigraph
// with at least four vertices has a non-bridge non-loop edge (delete and
// smooth) or a pendant loop (a leaf of its bridge tree), so the two
// augmentations below reach every class.
void augment(const TrivalentGraph& g, std::map<std::vector<std::uint8_t>, TrivalentGraph>& out) {
  const auto base = edge_list(g);
  const int n = g.vertex_count();
  const int u = n, w = n + 1;
  auto record = [&](const std::vector<EdgeEnds>& edges) {
    TrivalentGraph candidate = TrivalentGraph::from_edges(n + 2, edges);
    auto form = canonical_form(candidate);
    if (!out.contains(form.bytes)) out.emplace(std::move(form.bytes), canonical_graph(candidate));
  };

  const int m = static_cast<int>(base.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      std::vector<EdgeEnds> edges;
      for (int e = 0; e < m; ++e) {
        if (e != a && e != b) edges.push_back(base[e]);
      }
      if (a == b) {
        // Two subdivision points on one edge, joined by a new edge.
        edges.push_back({base[a].first, u});
        edges.push_back({u, w});
        edges.push_back({w, base[a].second});
      } else {
        edges.push_back({base[a].first, u});
        edges.push_back({u, base[a].second});
        edges.push_back({base[b].first, w});
        edges.push_back({w, base[b].second});
      }
      edges.push_back({u, w});
      record(edges);
    }
    // Pendant loop hung from a subdivision point.
    std::vector<EdgeEnds> edges;
    for (int e = 0; e < m; ++e) {
      if (e != a) edges.push_back(base[e]);
    }
    edges.push_back({base[a].first, u});
    edges.push_back({u, base[a].second});
    edges.push_back({u, w});
    edges.push_back({w, w});
    record(edges);
  }
}

std::vector<TrivalentGraph> sorted_values(const std::map<std::vector<std::uint8_t>, TrivalentGraph>& classes) {
  std::vector<TrivalentGraph> result;
  result.reserve(classes.size());
  for (const auto& [bytes, graph] : classes) result.push_back(graph);
  return result;
}

}  // namespace

int max_enumeration_rank() {
  if (const char* env = std::getenv("COVERMEASURE_MAX_RANK")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 2 && value <= 12) return static_cast<int>(value);
  }
  return kDefaultMaxRank;
}

std::vector<TrivalentGraph> enumerate_trivalent(int k, int max_rank) {
  if (k < 2) throw Error(ErrorCode::InvalidRank, "rank must be at least 2, got " + std::to_string(k));
  if (k > max_rank) {
    throw Error(ErrorCode::InvalidRank,
                "rank " + std::to_string(k) + " exceeds the enumeration cap " + std::to_string(max_rank));
  }
  // Levels are cached; every rank is derived from the previous one.
  static std::mutex mutex;
  static std::vector<std::vector<TrivalentGraph>> levels;
  std::lock_guard lock(mutex);
  if (levels.empty()) {
    std::map<std::vector<std::uint8_t>, TrivalentGraph> rank2;
    for (const auto& g : {dumbbell_graph(), theta_graph()}) {
      rank2.emplace(canonical_form(g).bytes, canonical_graph(g));
    }
    levels.push_back(sorted_values(rank2));
  }
  while (static_cast<int>(levels.size()) < k - 1) {
    std::map<std::vector<std::uint8_t>, TrivalentGraph> next;
    for (const auto& g : levels.back()) augment(g, next);
    levels.push_back(sorted_values(next));
  }
  return levels[k - 2];
}

std::vector<TrivalentGraph> enumerate_trivalent(int k) { return enumerate_trivalent(k, max_enumeration_rank()); }

}  // namespace covermeasure
