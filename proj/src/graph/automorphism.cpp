#include "covermeasure/graph/automorphism.hpp"

#include <algorithm>
#include <set>

namespace covermeasure {

GraphAutomorphism GraphAutomorphism::after(const GraphAutomorphism& first) const {
  GraphAutomorphism out;
  out.dart_permutation.resize(first.dart_permutation.size());
  for (std::size_t d = 0; d < first.dart_permutation.size(); ++d) {
    out.dart_permutation[d] = dart_permutation[first.dart_permutation[d]];
  }
  return out;
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  GraphAutomorphism out;
  out.dart_permutation.resize(dart_permutation.size());
  for (std::size_t d = 0; d < dart_permutation.size(); ++d) {
    out.dart_permutation[dart_permutation[d]] = static_cast<int>(d);
  }
  return out;
}

EdgePermutation GraphAutomorphism::edge_permutation(const TrivalentGraph& graph) const {
  EdgePermutation image(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    image[e] = graph.edge_of(dart_permutation[graph.edge_darts(e).first]);
  }
  return image;
}

std::vector<int> GraphAutomorphism::vertex_permutation(const TrivalentGraph& graph) const {
  std::vector<int> image(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    image[v] = graph.vertex_of(dart_permutation[graph.darts_at(v)[0]]);
  }
  return image;
}

bool GraphAutomorphism::is_automorphism_of(const TrivalentGraph& graph) const {
  const int n = graph.dart_count();
  if (static_cast<int>(dart_permutation.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    const int image = dart_permutation[d];
    if (image < 0 || image >= n || seen[image]) return false;
    seen[image] = 1;
    if (dart_permutation[graph.partner(d)] != graph.partner(image)) return false;
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const auto& darts = graph.darts_at(v);
    const int target = graph.vertex_of(dart_permutation[darts[0]]);
    for (int d : darts) {
      if (graph.vertex_of(dart_permutation[d]) != target) return false;
    }
  }
  return true;
}

namespace {

// Backtracking over darts in BFS order so each vertex's image is pinned by
// the first of its darts that gets mapped.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const TrivalentGraph& graph)
      : graph_(graph),
        image_(graph.dart_count(), -1),
        dart_used_(graph.dart_count(), 0),
        vertex_image_(graph.vertex_count(), -1),
        vertex_used_(graph.vertex_count(), 0) {
    std::vector<char> queued(graph.vertex_count(), 0);
    std::vector<int> queue{0};
    queued[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int d : graph.darts_at(queue[head])) {
        order_.push_back(d);
        const int w = graph.vertex_of(graph.partner(d));
        if (!queued[w]) {
          queued[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<GraphAutomorphism> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(std::size_t position) {
    while (position < order_.size() && image_[order_[position]] >= 0) ++position;
    if (position == order_.size()) {
      found_.push_back(GraphAutomorphism{image_});
      return;
    }
    const int d = order_[position];
    const int v = graph_.vertex_of(d);
    for (int target = 0; target < graph_.dart_count(); ++target) {
      if (dart_used_[target]) continue;
      const int tv = graph_.vertex_of(target);
      if (vertex_image_[v] >= 0 ? vertex_image_[v] != tv : vertex_used_[tv]) continue;
      std::vector<int> assigned;
      if (assign(d, target, assigned) && assign(graph_.partner(d), graph_.partner(target), assigned)) {
        extend(position + 1);
      }
      undo(assigned);
    }
  }

  bool assign(int d, int target, std::vector<int>& assigned) {
    if (image_[d] >= 0) return image_[d] == target;
    if (dart_used_[target]) return false;
    const int v = graph_.vertex_of(d);
    const int tv = graph_.vertex_of(target);
    if (vertex_image_[v] >= 0) {
      if (vertex_image_[v] != tv) return false;
    } else {
      if (vertex_used_[tv]) return false;
      vertex_image_[v] = tv;
      vertex_used_[tv] = 1;
      vertex_assigned_by_.push_back(d);
    }
    image_[d] = target;
    dart_used_[target] = 1;
    assigned.push_back(d);
    return true;
  }

  void undo(const std::vector<int>& assigned) {
    for (auto it = assigned.rbegin(); it != assigned.rend(); ++it) {
      const int d = *it;
      if (!vertex_assigned_by_.empty() && vertex_assigned_by_.back() == d) {
        const int v = graph_.vertex_of(d);
        vertex_used_[vertex_image_[v]] = 0;
        vertex_image_[v] = -1;
        vertex_assigned_by_.pop_back();
      }
      dart_used_[image_[d]] = 0;
      image_[d] = -1;
    }
  }

  const TrivalentGraph& graph_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> dart_used_;
  std::vector<int> vertex_image_;
  std::vector<char> vertex_used_;
  std::vector<int> vertex_assigned_by_;
  std::vector<GraphAutomorphism> found_;
};

bool is_identity(const EdgePermutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

}  // namespace

std::vector<GraphAutomorphism> automorphism_group(const TrivalentGraph& graph) {
  return AutomorphismSearch(graph).run();
}

std::vector<GraphAutomorphism> triv_subgroup(const TrivalentGraph& graph) {
  std::vector<GraphAutomorphism> result;
  for (auto& a : automorphism_group(graph)) {
    if (is_identity(a.edge_permutation(graph))) result.push_back(std::move(a));
  }
  return result;
}

std::vector<EdgePermutation> edge_action(const TrivalentGraph& graph) {
  std::set<EdgePermutation> distinct;
  for (const auto& a : automorphism_group(graph)) distinct.insert(a.edge_permutation(graph));
  return {distinct.begin(), distinct.end()};
}

SymmetryData symmetry_data(const TrivalentGraph& graph) {
  SymmetryData data;
  std::set<EdgePermutation> distinct;
  for (const auto& a : automorphism_group(graph)) {
    ++data.aut_order;
    auto p = a.edge_permutation(graph);
    if (is_identity(p)) ++data.triv_order;
    distinct.insert(std::move(p));
  }
  data.edge_group.assign(distinct.begin(), distinct.end());
  return data;
}

}  // namespace covermeasure
