#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "covermeasure/core/rational.hpp"
#include "covermeasure/graph/automorphism.hpp"
#include "covermeasure/graph/trivalent_graph.hpp"

namespace covermeasure {

/// constant + sum_e coefficients[e] * x_e.
struct AffineForm {
  std::vector<Rational> coefficients;
  Rational constant = 0;

  Rational operator()(std::span<const Rational> x) const;
  double operator()(std::span<const double> x) const;
};

/// Minimum of finitely many affine forms in the edge lengths.
struct PiecewiseLinear {
  std::vector<AffineForm> forms;

  Rational operator()(std::span<const Rational> x) const;
  double operator()(std::span<const double> x) const;
};

/// A functional on metric graphs. `evaluate` works for every graph type;
/// `piecewise_linear`, when set, returns an exact descriptor of the same
/// function on one graph type (required for exact integration and used by
/// the batched Monte Carlo path).
struct Functional {
  std::string name;
  std::function<double(const TrivalentGraph&, std::span<const double>)> evaluate;
  std::function<PiecewiseLinear(const TrivalentGraph&)> piecewise_linear;
};

Functional constant_functional(const Rational& value);

/// Throws Error(SymmetryViolation) unless f(g.x) == f(x) for every edge
/// permutation g in `group`, checked exactly on a fixed set of generic
/// rational points and their images.
void check_symmetry(const PiecewiseLinear& f, std::span<const EdgePermutation> group, int edge_count);

/// Applies an edge permutation to a length vector: out[p[e]] = x[e].
template <class T>
std::vector<T> permute_lengths(const EdgePermutation& p, std::span<const T> x) {
  std::vector<T> out(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) out[p[e]] = x[e];
  return out;
}

}  // namespace covermeasure
