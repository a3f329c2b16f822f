#include "covermeasure/invariants/functionals.hpp"

#include "covermeasure/core/error.hpp"
#include "covermeasure/invariants/systole.hpp"

namespace covermeasure {

namespace {

AffineForm edge_sum_form(int edge_count, const std::vector<char>& mask) {
  AffineForm form;
  form.coefficients.assign(edge_count, Rational(0));
  for (int e = 0; e < edge_count; ++e) {
    if (mask[e]) form.coefficients[e] = 1;
  }
  return form;
}

}  // namespace

Functional systole_functional() {
  Functional f;
  f.name = "systole";
  f.evaluate = [](const TrivalentGraph& graph, std::span<const double> x) { return systole<double>(graph, x); };
  f.piecewise_linear = [](const TrivalentGraph& graph) {
    PiecewiseLinear pl;
    for (const auto& cycle : simple_cycles(graph)) pl.forms.push_back(edge_sum_form(graph.edge_count(), cycle));
    return pl;
  };
  return f;
}

Functional bridge_functional() {
  Functional f;
  f.name = "bridge";
  f.evaluate = [](const TrivalentGraph& graph, std::span<const double>) {
    return separating_edge_indicator(graph) ? 1.0 : 0.0;
  };
  f.piecewise_linear = [](const TrivalentGraph& graph) {
    AffineForm form;
    form.coefficients.assign(graph.edge_count(), Rational(0));
    form.constant = separating_edge_indicator(graph) ? 1 : 0;
    return PiecewiseLinear{{std::move(form)}};
  };
  return f;
}

Functional minedge_functional() {
  Functional f;
  f.name = "minedge";
  f.evaluate = [](const TrivalentGraph&, std::span<const double> x) { return min_edge_length<double>(x); };
  f.piecewise_linear = [](const TrivalentGraph& graph) {
    PiecewiseLinear pl;
    for (int e = 0; e < graph.edge_count(); ++e) {
      std::vector<char> mask(graph.edge_count(), 0);
      mask[e] = 1;
      pl.forms.push_back(edge_sum_form(graph.edge_count(), mask));
    }
    return pl;
  };
  return f;
}

Functional functional_by_name(std::string_view name) {
  if (name == "systole") return systole_functional();
  if (name == "bridge") return bridge_functional();
  if (name == "minedge") return minedge_functional();
  throw Error(ErrorCode::InvalidArgument, "unknown functional '" + std::string(name) + "'");
}

std::vector<std::string> functional_names() { return {"systole", "bridge", "minedge"}; }

}  // namespace covermeasure
