#include "covermeasure/graph/trivalent_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "covermeasure/core/error.hpp"

namespace covermeasure {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidGraph, "invalid trivalent graph: " + what);
}

}  // namespace

TrivalentGraph TrivalentGraph::from_edges(int vertex_count, std::span<const EdgeEnds> edges) {
  if (vertex_count < 0) invalid("negative vertex count");
  TrivalentGraph g;
  g.vertex_count_ = vertex_count;
  const auto dart_count = 2 * edges.size();
  g.pairing_.resize(dart_count);
  g.dart_vertex_.resize(dart_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      invalid("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    g.pairing_[2 * e] = static_cast<int>(2 * e + 1);
    g.pairing_[2 * e + 1] = static_cast<int>(2 * e);
    g.dart_vertex_[2 * e] = u;
    g.dart_vertex_[2 * e + 1] = v;
  }
  g.validate_and_index();
  return g;
}

TrivalentGraph TrivalentGraph::from_darts(std::vector<int> pairing, std::vector<int> dart_vertex) {
  if (pairing.size() != dart_vertex.size()) invalid("pairing and vertex assignment differ in size");
  TrivalentGraph g;
  int max_vertex = -1;
  for (int v : dart_vertex) max_vertex = std::max(max_vertex, v);
  g.vertex_count_ = max_vertex + 1;
  g.pairing_ = std::move(pairing);
  g.dart_vertex_ = std::move(dart_vertex);
  g.validate_and_index();
  return g;
}

void TrivalentGraph::validate_and_index() {
  const int darts = dart_count();
  if (darts % 2 != 0) invalid("odd number of darts");
  if (vertex_count_ < 2) invalid("fewer than two vertices");
  for (int d = 0; d < darts; ++d) {
    const int p = pairing_[d];
    if (p < 0 || p >= darts) invalid("pairing out of range");
    if (p == d) invalid("pairing has a fixed point at dart " + std::to_string(d));
    if (pairing_[p] != d) invalid("pairing is not an involution");
    const int v = dart_vertex_[d];
    if (v < 0 || v >= vertex_count_) invalid("vertex assignment out of range");
  }

  vertex_darts_.assign(vertex_count_, {-1, -1, -1});
  std::vector<int> fill(vertex_count_, 0);
  for (int d = 0; d < darts; ++d) {
    const int v = dart_vertex_[d];
    if (fill[v] == 3) invalid("vertex " + std::to_string(v) + " has more than three darts");
    vertex_darts_[v][fill[v]++] = d;
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (fill[v] != 3) invalid("vertex " + std::to_string(v) + " is not trivalent");
  }

  dart_edge_.assign(darts, -1);
  edge_darts_.clear();
  for (int d = 0; d < darts; ++d) {
    if (dart_edge_[d] >= 0) continue;
    const int e = static_cast<int>(edge_darts_.size());
    dart_edge_[d] = e;
    dart_edge_[pairing_[d]] = e;
    edge_darts_.emplace_back(d, pairing_[d]);
  }

  const int k = rank();
  if (k < 2 || vertex_count_ != 2 * k - 2 || edge_count() != 3 * k - 3) {
    invalid("counts do not match a trivalent graph of rank >= 2");
  }
  std::vector<char> all(edge_count(), 1);
  if (!is_connected_subgraph(*this, all)) invalid("graph is not connected");
}

EdgeEnds TrivalentGraph::endpoints(int e) const {
  auto [a, b] = edge_darts_[e];
  return {dart_vertex_[a], dart_vertex_[b]};
}

bool TrivalentGraph::is_loop(int e) const {
  auto [u, v] = endpoints(e);
  return u == v;
}

std::vector<std::vector<int>> TrivalentGraph::multiplicity_matrix() const {
  std::vector<std::vector<int>> m(vertex_count_, std::vector<int>(vertex_count_, 0));
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = endpoints(e);
    if (u == v) {
      ++m[u][u];
    } else {
      ++m[u][v];
      ++m[v][u];
    }
  }
  return m;
}

std::string TrivalentGraph::to_text() const {
  std::ostringstream out;
  out << "rank=" << rank() << "; vertices=" << vertex_count() << "; edges:";
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = endpoints(e);
    out << ' ' << e << ':' << u << '-' << v;
  }
  return out.str();
}

TrivalentGraph dumbbell_graph() { return TrivalentGraph::from_edges(2, {{0, 0}, {1, 1}, {0, 1}}); }

TrivalentGraph theta_graph() { return TrivalentGraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}}); }

TrivalentGraph k4_graph() {
  return TrivalentGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

bool is_connected_subgraph(const TrivalentGraph& graph, std::span<const char> kept) {
  const int n = graph.vertex_count();
  if (n == 0) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (!kept[e]) continue;
    auto [u, v] = graph.endpoints(e);
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<int> bridges(const TrivalentGraph& graph) {
  // Lowlink DFS keyed on edge ids, so parallel edges are handled.
  const int n = graph.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<int> result;
  int counter = 0;

  struct Frame {
    int vertex;
    int via_edge;
    int next_slot;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, 0});
  order[0] = low[0] = counter++;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_slot < 3) {
      const int dart = graph.darts_at(top.vertex)[top.next_slot++];
      const int e = graph.edge_of(dart);
      if (e == top.via_edge || graph.is_loop(e)) continue;
      const int w = graph.vertex_of(graph.partner(dart));
      if (order[w] < 0) {
        order[w] = low[w] = counter++;
        stack.push_back({w, e, 0});
      } else {
        low[top.vertex] = std::min(low[top.vertex], order[w]);
      }
      continue;
    }
    const Frame done = top;
    stack.pop_back();
    if (!stack.empty()) {
      const int parent = stack.back().vertex;
      low[parent] = std::min(low[parent], low[done.vertex]);
      if (low[done.vertex] > order[parent]) result.push_back(done.via_edge);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace covermeasure
