#include "covermeasure/measure/integrate_exact.hpp"

#include <algorithm>
#include <utility>

#include "covermeasure/core/error.hpp"
#include "covermeasure/core/rng.hpp"

namespace covermeasure {

Rational AffineForm::operator()(std::span<const Rational> x) const {
  Rational value = constant;
  for (std::size_t e = 0; e < coefficients.size(); ++e) {
    if (coefficients[e] != 0) value += coefficients[e] * x[e];
  }
  return value;
}

double AffineForm::operator()(std::span<const double> x) const {
  double value = to_double(constant);
  for (std::size_t e = 0; e < coefficients.size(); ++e) {
    if (coefficients[e] != 0) value += to_double(coefficients[e]) * x[e];
  }
  return value;
}

Rational PiecewiseLinear::operator()(std::span<const Rational> x) const {
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "piecewise-linear functional without forms");
  Rational best = forms.front()(x);
  for (std::size_t i = 1; i < forms.size(); ++i) best = std::min(best, forms[i](x));
  return best;
}

double PiecewiseLinear::operator()(std::span<const double> x) const {
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "piecewise-linear functional without forms");
  double best = forms.front()(x);
  for (std::size_t i = 1; i < forms.size(); ++i) best = std::min(best, forms[i](x));
  return best;
}

Functional constant_functional(const Rational& value) {
  Functional f;
  f.name = "constant";
  const double as_double = to_double(value);
  f.evaluate = [as_double](const TrivalentGraph&, std::span<const double>) { return as_double; };
  f.piecewise_linear = [value](const TrivalentGraph& graph) {
    AffineForm form;
    form.coefficients.assign(graph.edge_count(), Rational(0));
    form.constant = value;
    return PiecewiseLinear{{std::move(form)}};
  };
  return f;
}

void check_symmetry(const PiecewiseLinear& f, std::span<const EdgePermutation> group, int edge_count) {
  for (const auto& form : f.forms) {
    if (static_cast<int>(form.coefficients.size()) != edge_count) {
      throw Error(ErrorCode::InvalidArgument, "affine form has the wrong number of coefficients");
    }
  }
  constexpr int kProbePoints = 8;
  for (int t = 0; t < kProbePoints; ++t) {
    Rng rng(0xC0FFEEULL + static_cast<std::uint64_t>(t));
    std::vector<Rational> x(edge_count);
    for (auto& xe : x) xe = make_rational(static_cast<std::int64_t>(rng.below(997)) + 1, 997);
    const Rational base = f(std::span<const Rational>(x));
    for (const auto& p : group) {
      const auto moved = permute_lengths<Rational>(p, x);
      if (f(std::span<const Rational>(moved)) != base) {
        throw Error(ErrorCode::SymmetryViolation, "functional is not invariant under the edge action");
      }
    }
  }
}

namespace {

using Point = std::vector<Rational>;

Rational abs_determinant(std::vector<Point> rows) {
  const std::size_t n = rows.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) std::swap(rows[pivot], rows[col]);
    det *= rows[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  return det < 0 ? Rational(-det) : det;
}

struct Piece {
  std::vector<Point> vertices;
  std::vector<int> forms;
};

}  // namespace

Rational simplex_average(const PiecewiseLinear& f, int edge_count) {
  if (f.forms.empty()) throw Error(ErrorCode::InvalidArgument, "piecewise-linear functional without forms");
  if (edge_count < 1) throw Error(ErrorCode::InvalidArgument, "simplex needs at least one coordinate");
  const std::size_t n = static_cast<std::size_t>(edge_count);

  Piece root;
  for (std::size_t i = 0; i < n; ++i) {
    Point v(n, Rational(0));
    v[i] = 1;
    root.vertices.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < f.forms.size(); ++i) root.forms.push_back(static_cast<int>(i));

  Rational total = 0;
  std::vector<Piece> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Piece piece = std::move(stack.back());
    stack.pop_back();

    // values[a][v]: active form a at vertex v.
    std::vector<std::vector<Rational>> values;
    for (int form : piece.forms) {
      std::vector<Rational> at;
      for (const auto& v : piece.vertices) at.push_back(f.forms[form](std::span<const Rational>(v)));
      values.push_back(std::move(at));
    }

    // Drop forms that another form bounds from below on the whole piece.
    std::vector<char> keep(piece.forms.size(), 1);
    for (std::size_t a = 0; a < piece.forms.size(); ++a) {
      for (std::size_t b = 0; b < piece.forms.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        bool b_below = true;
        for (std::size_t v = 0; v < n && b_below; ++v) b_below = values[b][v] <= values[a][v];
        if (b_below) keep[a] = 0;
      }
    }
    std::vector<int> alive;
    std::vector<std::vector<Rational>> alive_values;
    for (std::size_t a = 0; a < piece.forms.size(); ++a) {
      if (keep[a]) {
        alive.push_back(piece.forms[a]);
        alive_values.push_back(std::move(values[a]));
      }
    }

    if (alive.size() == 1) {
      Rational mean = 0;
      for (const auto& value : alive_values[0]) mean += value;
      mean /= static_cast<int>(n);
      total += abs_determinant(piece.vertices) * mean;
      continue;
    }

    // Two undominated forms cross somewhere inside: cut along their
    // difference at one crossing edge of the simplex.
    std::vector<Rational> diff(n);
    for (std::size_t v = 0; v < n; ++v) diff[v] = alive_values[0][v] - alive_values[1][v];
    std::size_t pos = n, neg = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (diff[v] > 0 && pos == n) pos = v;
      if (diff[v] < 0 && neg == n) neg = v;
    }
    const Rational t = diff[pos] / (diff[pos] - diff[neg]);
    Point cut(n);
    for (std::size_t c = 0; c < n; ++c) {
      cut[c] = piece.vertices[pos][c] + t * (piece.vertices[neg][c] - piece.vertices[pos][c]);
    }
    Piece left{piece.vertices, alive};
    Piece right{std::move(piece.vertices), alive};
    left.vertices[pos] = cut;
    right.vertices[neg] = std::move(cut);
    stack.push_back(std::move(left));
    stack.push_back(std::move(right));
  }
  return total;
}

BlockIntegral integrate_exact_piecewise_linear(const SimplexBlock& block, const PiecewiseLinear& f) {
  check_symmetry(f, block.edge_group, block.edge_count());
  BlockIntegral result;
  result.normalized = simplex_average(f, block.edge_count());
  result.sigma_integral = result.normalized * block.mass;
  return result;
}

ExactExpectation expectation(const MeasureMixture& mixture, const Functional& f) {
  if (!f.piecewise_linear) {
    throw Error(ErrorCode::Unsupported, "functional '" + f.name + "' has no exact piecewise-linear form");
  }
  ExactExpectation result;
  result.value = 0;
  for (const auto& wb : mixture.blocks) {
    BlockContribution contribution{wb.block.graph_id, wb.weight,
                                   integrate_exact_piecewise_linear(wb.block, f.piecewise_linear(*wb.block.graph))};
    result.value += wb.weight * contribution.integral.normalized;
    result.blocks.push_back(std::move(contribution));
  }
  return result;
}

}  // namespace covermeasure
