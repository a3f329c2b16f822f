#pragma once

#include <string>
#include <vector>

#include "covermeasure/core/rational.hpp"
#include "covermeasure/measure/functional.hpp"
#include "covermeasure/measure/mixture.hpp"

namespace covermeasure {

/// Exact average of a min-of-affine-forms function over the standard
/// simplex {x > 0, sum x = 1} in R^edge_count (uniform law).
///
/// The simplex is cut along the hyperplanes l_i = l_j until a single form
/// is minimal at every vertex of each piece; each piece then contributes
/// relative volume times the mean of that form over its vertices.
Rational simplex_average(const PiecewiseLinear& f, int edge_count);

struct BlockIntegral {
  /// E[f] under the uniform law on the block.
  Rational normalized;
  /// The sigma_X integral over the folded simplex: normalized * mass.
  Rational sigma_integral;
};

/// Checks f against the block's edge group, then integrates exactly.
BlockIntegral integrate_exact_piecewise_linear(const SimplexBlock& block, const PiecewiseLinear& f);

struct BlockContribution {
  std::string graph_id;
  Rational weight;
  BlockIntegral integral;
};

struct ExactExpectation {
  Rational value;
  std::vector<BlockContribution> blocks;
};

/// sum over blocks of weight(X) * E_X[f]. Requires `f.piecewise_linear`.
ExactExpectation expectation(const MeasureMixture& mixture, const Functional& f);

}  // namespace covermeasure
