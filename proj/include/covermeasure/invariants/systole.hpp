#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "covermeasure/core/error.hpp"
#include "covermeasure/graph/trivalent_graph.hpp"

namespace covermeasure {

namespace detail {

// Dijkstra from `source` to `target` ignoring edge `skipped`.
template <class T>
std::optional<T> shortest_path_avoiding(int vertex_count, std::span<const EdgeEnds> edges,
                                        std::span<const T> lengths, int skipped, int source, int target) {
  std::vector<std::vector<std::pair<int, int>>> adjacency(vertex_count);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (e == skipped || edges[e].first == edges[e].second) continue;
    adjacency[edges[e].first].push_back({edges[e].second, e});
    adjacency[edges[e].second].push_back({edges[e].first, e});
  }
  std::vector<std::optional<T>> dist(vertex_count);
  std::vector<char> done(vertex_count, 0);
  dist[source] = T(0);
  for (;;) {
    int best = -1;
    for (int v = 0; v < vertex_count; ++v) {
      if (!done[v] && dist[v] && (best < 0 || *dist[v] < *dist[best])) best = v;
    }
    if (best < 0) return std::nullopt;
    if (best == target) return dist[best];
    done[best] = 1;
    for (auto [next, e] : adjacency[best]) {
      T candidate = *dist[best] + lengths[e];
      if (!dist[next] || candidate < *dist[next]) dist[next] = candidate;
    }
  }
}

}  // namespace detail

/// Length of the shortest cycle of a connected metric multigraph given by
/// an edge list: each loop is a candidate, and each other edge u-v
/// contributes its length plus the shortest u-v path avoiding it.
/// Throws Error(InvalidGraph) if the graph is disconnected or acyclic.
template <class T>
T systole(int vertex_count, std::span<const EdgeEnds> edges, std::span<const T> lengths) {
  if (edges.size() != lengths.size()) throw Error(ErrorCode::InvalidArgument, "expected one length per edge");
  std::vector<int> root(vertex_count);
  for (int v = 0; v < vertex_count; ++v) root[v] = v;
  std::function<int(int)> find = [&](int v) { return root[v] == v ? v : root[v] = find(root[v]); };
  int components = vertex_count;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    }
    const int a = find(u), b = find(v);
    if (a != b) {
      root[a] = b;
      --components;
    }
  }
  if (components != 1) throw Error(ErrorCode::InvalidGraph, "systole of a disconnected graph");

  std::optional<T> best;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    std::optional<T> candidate;
    if (edges[e].first == edges[e].second) {
      candidate = lengths[e];
    } else if (auto path = detail::shortest_path_avoiding<T>(vertex_count, edges, lengths, e, edges[e].first,
                                                              edges[e].second)) {
      candidate = *path + lengths[e];
    }
    if (candidate && (!best || *candidate < *best)) best = candidate;
  }
  if (!best) throw Error(ErrorCode::InvalidGraph, "graph has no cycle");
  return *best;
}

template <class T>
T systole(const TrivalentGraph& graph, std::span<const T> lengths) {
  std::vector<EdgeEnds> edges;
  for (int e = 0; e < graph.edge_count(); ++e) edges.push_back(graph.endpoints(e));
  return systole<T>(graph.vertex_count(), edges, lengths);
}

template <class T>
T min_edge_length(std::span<const T> lengths) {
  if (lengths.empty()) throw Error(ErrorCode::InvalidArgument, "no edges");
  return *std::min_element(lengths.begin(), lengths.end());
}

inline bool separating_edge_indicator(const TrivalentGraph& graph) { return !bridges(graph).empty(); }

/// Edge masks of all simple cycles, found as the elements of the cycle
/// space in which every vertex has degree 0 or 2 and the support is
/// connected.
std::vector<std::vector<char>> simple_cycles(const TrivalentGraph& graph);

}  // namespace covermeasure
