#pragma once

// Independent reference implementations used only by the tests. None of
// them call the library algorithm they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "covermeasure/core/rational.hpp"
#include "covermeasure/graph/trivalent_graph.hpp"
#include "covermeasure/measure/functional.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline bool matrix_connected(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (m[v][w] > 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

/// Smallest relabelled copy over every vertex permutation.
inline Matrix exhaustive_canonical(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix best;
  do {
    Matrix relabelled(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) relabelled[i][j] = m[perm[i]][perm[j]];
    }
    if (best.empty() || relabelled < best) best = std::move(relabelled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Isomorphism classes from every perfect matching of the 6k-6 darts
/// (dart d sits at vertex d / 3), keeping connected results.
inline std::set<Matrix> pairing_types(int k) {
  const int V = 2 * k - 2, darts = 3 * V;
  std::set<Matrix> types;
  std::vector<int> partner(darts, -1);
  std::function<void()> recurse = [&] {
    int first = 0;
    while (first < darts && partner[first] >= 0) ++first;
    if (first == darts) {
      Matrix m(V, std::vector<int>(V, 0));
      for (int d = 0; d < darts; ++d) {
        if (d < partner[d]) {
          const int u = d / 3, v = partner[d] / 3;
          ++m[u][v];
          if (u != v) ++m[v][u];
        }
      }
      if (matrix_connected(m)) types.insert(exhaustive_canonical(m));
      return;
    }
    for (int other = first + 1; other < darts; ++other) {
      if (partner[other] >= 0) continue;
      partner[first] = other;
      partner[other] = first;
      recurse();
      partner[first] = partner[other] = -1;
    }
  };
  recurse();
  return types;
}

/// Isomorphism classes from labelled symmetric multiplicity matrices with
/// 2 * loops + other edges = 3 at every vertex.
inline std::set<Matrix> labelled_matrix_types(int k) {
  const int V = 2 * k - 2;
  std::set<Matrix> types;
  Matrix m(V, std::vector<int>(V, 0));
  std::vector<int> degree(V, 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < V; ++i) {
    for (int j = i; j < V; ++j) cells.push_back({i, j});
  }
  std::function<void(std::size_t)> recurse = [&](std::size_t index) {
    if (index == cells.size()) {
      if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; }) && matrix_connected(m)) {
        types.insert(exhaustive_canonical(m));
      }
      return;
    }
    const auto [i, j] = cells[index];
    // Row i is complete after its last cell.
    for (int value = 0; value <= 3; ++value) {
      const int add_i = i == j ? 2 * value : value;
      const int add_j = i == j ? 0 : value;
      if (degree[i] + add_i > 3 || degree[j] + add_j > 3) break;
      m[i][j] = m[j][i] = value;
      degree[i] += add_i;
      degree[j] += add_j;
      if (j != V - 1 || degree[i] == 3) recurse(index + 1);
      degree[i] -= add_i;
      degree[j] -= add_j;
    }
    m[i][j] = m[j][i] = 0;
  };
  recurse(0);
  return types;
}

inline Matrix canonical_of(const covermeasure::TrivalentGraph& g) { return exhaustive_canonical(g.multiplicity_matrix()); }

/// Every dart permutation that sends the three darts of each vertex onto
/// the darts of one vertex and commutes with the pairing.
inline std::vector<std::vector<int>> brute_force_automorphisms(const covermeasure::TrivalentGraph& g) {
  const int V = g.vertex_count();
  std::vector<std::vector<int>> found;
  std::vector<int> vertex_perm(V);
  std::iota(vertex_perm.begin(), vertex_perm.end(), 0);
  do {
    // Choose a bijection darts_at(v) -> darts_at(vertex_perm[v]) per vertex.
    const int total = static_cast<int>(std::pow(6, V));
    for (int code = 0; code < total; ++code) {
      std::vector<int> perm(g.dart_count());
      int c = code;
      for (int v = 0; v < V; ++v) {
        std::array<int, 3> order{0, 1, 2};
        for (int step = c % 6; step > 0; --step) std::next_permutation(order.begin(), order.end());
        c /= 6;
        for (int slot = 0; slot < 3; ++slot) perm[g.darts_at(v)[slot]] = g.darts_at(vertex_perm[v])[order[slot]];
      }
      bool ok = true;
      for (int d = 0; d < g.dart_count() && ok; ++d) ok = perm[g.partner(d)] == g.partner(perm[d]);
      if (ok) found.push_back(std::move(perm));
    }
  } while (std::next_permutation(vertex_perm.begin(), vertex_perm.end()));
  return found;
}

inline bool connected_without(const covermeasure::TrivalentGraph& g, int removed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e == removed) continue;
      const auto [a, b] = g.endpoints(e);
      for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
        if (from == v && !seen[to]) {
          seen[to] = 1;
          stack.push_back(to);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline std::vector<int> naive_bridges(const covermeasure::TrivalentGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!connected_without(g, e)) out.push_back(e);
  }
  return out;
}

/// Shortest simple cycle by depth-first enumeration: each cycle is found
/// from its smallest edge e0 = (u, v) as e0 plus a simple v-u path over
/// larger edges.
template <class T>
T dfs_systole(const covermeasure::TrivalentGraph& g, std::span<const T> x) {
  std::optional<T> best;
  auto consider = [&](const T& value) {
    if (!best || value < *best) best = value;
  };
  for (int e0 = 0; e0 < g.edge_count(); ++e0) {
    const auto [u, v] = g.endpoints(e0);
    if (u == v) {
      consider(x[e0]);
      continue;
    }
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[v] = 1;
    std::function<void(int, T)> walk = [&](int at, T length) {
      for (int e = e0 + 1; e < g.edge_count(); ++e) {
        const auto [a, b] = g.endpoints(e);
        if (a == b) continue;
        int next = -1;
        if (a == at) next = b;
        else if (b == at) next = a;
        if (next < 0) continue;
        if (next == u) {
          consider(length + x[e] + x[e0]);
        } else if (!on_path[next]) {
          on_path[next] = 1;
          walk(next, length + x[e]);
          on_path[next] = 0;
        }
      }
    };
    walk(v, T(0));
  }
  return *best;
}

/// Average of f over the lattice points n / mesh, n in Z_{>0}^3, sum n = mesh:
/// a Riemann sum for the uniform law on the 2-simplex.
inline double riemann_average_3(const std::function<double(std::span<const double>)>& f, int mesh) {
  double total = 0;
  long count = 0;
  for (int i = 1; i < mesh; ++i) {
    for (int j = 1; i + j < mesh; ++j) {
      const double point[3] = {double(i) / mesh, double(j) / mesh, double(mesh - i - j) / mesh};
      total += f(point);
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

/// Kolmogorov survival function Q(lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2).
inline double kolmogorov_q(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 ? 1 : -1) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(2 * sum, 0.0, 1.0);
}

inline double ks_pvalue(double d, double effective_n) {
  const double root = std::sqrt(effective_n);
  return kolmogorov_q((root + 0.12 + 0.11 / root) * d);
}

inline double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const double t = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    d = std::max(d, std::fabs(double(i) / a.size() - double(j) / b.size()));
  }
  const double n = double(a.size()) * b.size() / (a.size() + b.size());
  return ks_pvalue(d, n);
}

inline double ks_one_sample_pvalue(std::vector<double> a, const std::function<double(double)>& cdf) {
  std::sort(a.begin(), a.end());
  double d = 0;
  const double n = static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double f = cdf(a[i]);
    d = std::max({d, std::fabs(double(i + 1) / n - f), std::fabs(f - double(i) / n)});
  }
  return ks_pvalue(d, n);
}

}  // namespace oracle
