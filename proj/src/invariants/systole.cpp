#include "covermeasure/invariants/systole.hpp"

#include <numeric>

namespace covermeasure {

namespace {

// Fundamental cycles of a BFS spanning tree, as edge masks.
std::vector<std::vector<char>> fundamental_cycles(const TrivalentGraph& graph) {
  const int V = graph.vertex_count(), E = graph.edge_count();
  std::vector<int> parent_edge(V, -1), depth(V, -1);
  std::vector<char> in_tree(E, 0);
  std::vector<int> queue{0};
  depth[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int d : graph.darts_at(v)) {
      const int e = graph.edge_of(d);
      const int w = graph.vertex_of(graph.partner(d));
      if (depth[w] >= 0) continue;
      depth[w] = depth[v] + 1;
      parent_edge[w] = e;
      in_tree[e] = 1;
      queue.push_back(w);
    }
  }
  auto parent = [&](int v) {
    const auto [a, b] = graph.endpoints(parent_edge[v]);
    return a == v ? b : a;
  };
  std::vector<std::vector<char>> cycles;
  for (int e = 0; e < E; ++e) {
    if (in_tree[e]) continue;
    std::vector<char> mask(E, 0);
    mask[e] = 1;
    auto [u, v] = graph.endpoints(e);
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      mask[parent_edge[u]] ^= 1;
      u = parent(u);
    }
    cycles.push_back(std::move(mask));
  }
  return cycles;
}

bool is_simple_cycle(const TrivalentGraph& graph, const std::vector<char>& mask) {
  std::vector<int> degree(graph.vertex_count(), 0);
  int touched_edge = -1;
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (!mask[e]) continue;
    const auto [u, v] = graph.endpoints(e);
    ++degree[u];
    ++degree[v];
    touched_edge = e;
  }
  if (touched_edge < 0) return false;
  for (int d : degree) {
    if (d != 0 && d != 2) return false;
  }
  // Connected support: walk from one edge along masked edges.
  std::vector<char> seen_vertex(graph.vertex_count(), 0);
  std::vector<int> stack{graph.endpoints(touched_edge).first};
  seen_vertex[stack.back()] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int d : graph.darts_at(v)) {
      if (!mask[graph.edge_of(d)]) continue;
      const int w = graph.vertex_of(graph.partner(d));
      if (!seen_vertex[w]) {
        seen_vertex[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (degree[v] != 0 && !seen_vertex[v]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<char>> simple_cycles(const TrivalentGraph& graph) {
  const auto basis = fundamental_cycles(graph);
  const std::size_t combos = std::size_t{1} << basis.size();
  std::vector<std::vector<char>> cycles;
  for (std::size_t bits = 1; bits < combos; ++bits) {
    std::vector<char> mask(graph.edge_count(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!(bits >> i & 1)) continue;
      for (int e = 0; e < graph.edge_count(); ++e) mask[e] ^= basis[i][e];
    }
    if (is_simple_cycle(graph, mask)) cycles.push_back(std::move(mask));
  }
  return cycles;
}

}  // namespace covermeasure
