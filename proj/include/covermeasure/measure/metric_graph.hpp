#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "covermeasure/core/error.hpp"
#include "covermeasure/core/rational.hpp"
#include "covermeasure/graph/trivalent_graph.hpp"

namespace covermeasure {

/// A point of moduli space: a graph type with positive edge lengths. When
/// `normalized` construction is used the lengths sum to one.
template <class T>
class BasicMetricGraph {
 public:
  BasicMetricGraph(std::shared_ptr<const TrivalentGraph> graph, std::vector<T> lengths)
      : graph_(std::move(graph)), lengths_(std::move(lengths)) {
    if (!graph_) throw Error(ErrorCode::InvalidGraph, "metric graph without a graph");
    if (static_cast<int>(lengths_.size()) != graph_->edge_count()) {
      throw Error(ErrorCode::InvalidArgument, "expected one length per edge");
    }
    for (const T& x : lengths_) {
      if (!(x > 0)) throw Error(ErrorCode::InvalidArgument, "edge lengths must be positive");
    }
  }

  /// Rescales `lengths` to total length one.
  static BasicMetricGraph normalized(std::shared_ptr<const TrivalentGraph> graph, std::vector<T> lengths) {
    T total = 0;
    for (const T& x : lengths) total += x;
    if (!(total > 0)) throw Error(ErrorCode::InvalidArgument, "edge lengths must be positive");
    for (T& x : lengths) x = x / total;
    return BasicMetricGraph(std::move(graph), std::move(lengths));
  }

  const TrivalentGraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const TrivalentGraph>& graph_ptr() const noexcept { return graph_; }
  std::span<const T> lengths() const noexcept { return lengths_; }
  T volume() const {
    T total = 0;
    for (const T& x : lengths_) total += x;
    return total;
  }

 private:
  std::shared_ptr<const TrivalentGraph> graph_;
  std::vector<T> lengths_;
};

using MetricGraph = BasicMetricGraph<double>;
using ExactMetricGraph = BasicMetricGraph<Rational>;

}  // namespace covermeasure
