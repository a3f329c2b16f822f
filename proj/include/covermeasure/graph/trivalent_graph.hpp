#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace covermeasure {

/// Endpoints of an edge; `first == second` for a loop.
using EdgeEnds = std::pair<int, int>;

/// Connected trivalent multigraph encoded by darts (half-edges).
///
/// Darts are numbered 0..2E-1. `partner(d)` is the fixed-point-free
/// involution pairing the two darts of an edge and `vertex_of(d)` assigns
/// each dart to one of V = 2k-2 vertices, three darts per vertex. Edges are
/// numbered by the order of their smallest dart. Loops and parallel edges
/// are allowed. Instances are immutable and validated on construction.
class TrivalentGraph {
 public:
  /// Builds from an edge list over vertices 0..vertex_count-1. Edge i gets
  /// darts 2i (at `first`) and 2i+1 (at `second`).
  static TrivalentGraph from_edges(int vertex_count, std::span<const EdgeEnds> edges);
  static TrivalentGraph from_edges(int vertex_count, std::initializer_list<EdgeEnds> edges) {
    return from_edges(vertex_count, std::span<const EdgeEnds>(edges.begin(), edges.size()));
  }

  /// Builds from a general dart pairing and vertex assignment.
  static TrivalentGraph from_darts(std::vector<int> pairing, std::vector<int> dart_vertex);

  int rank() const noexcept { return edge_count() - vertex_count() + 1; }
  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edge_darts_.size()); }
  int dart_count() const noexcept { return static_cast<int>(pairing_.size()); }
  int euler_characteristic() const noexcept { return vertex_count() - edge_count(); }

  int partner(int dart) const { return pairing_[dart]; }
  int vertex_of(int dart) const { return dart_vertex_[dart]; }
  int edge_of(int dart) const { return dart_edge_[dart]; }
  const std::array<int, 3>& darts_at(int vertex) const { return vertex_darts_[vertex]; }
  /// The two darts of edge `e`, smaller first.
  std::pair<int, int> edge_darts(int e) const { return edge_darts_[e]; }
  EdgeEnds endpoints(int e) const;
  bool is_loop(int e) const;

  const std::vector<int>& pairing() const noexcept { return pairing_; }
  const std::vector<int>& dart_vertices() const noexcept { return dart_vertex_; }

  /// Symmetric matrix of edge multiplicities; the diagonal counts loops.
  std::vector<std::vector<int>> multiplicity_matrix() const;

  /// Graph text record: `rank=<k>; vertices=<V>; edges: 0:u-v 1:u-v ...`.
  std::string to_text() const;

  friend bool operator==(const TrivalentGraph&, const TrivalentGraph&) = default;

 private:
  TrivalentGraph() = default;
  void validate_and_index();

  int vertex_count_ = 0;
  std::vector<int> pairing_;
  std::vector<int> dart_vertex_;
  std::vector<int> dart_edge_;
  std::vector<std::pair<int, int>> edge_darts_;
  std::vector<std::array<int, 3>> vertex_darts_;
};

/// The two rank-2 types: loops e0, e1 at vertices 0 and 1 joined by e2.
TrivalentGraph dumbbell_graph();
/// Three parallel edges between two vertices.
TrivalentGraph theta_graph();
/// Complete graph on four vertices (rank 3).
TrivalentGraph k4_graph();

/// Edges whose removal disconnects the graph. Loops are never bridges.
std::vector<int> bridges(const TrivalentGraph& graph);

/// Whether the edges in `kept` (a mask over edges) connect all vertices.
bool is_connected_subgraph(const TrivalentGraph& graph, std::span<const char> kept);

}  // namespace covermeasure
