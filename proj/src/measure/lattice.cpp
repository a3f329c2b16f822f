#include "covermeasure/measure/lattice.hpp"

#include <map>

#include "covermeasure/core/error.hpp"

namespace covermeasure {

namespace {

// Calls visit(parts) for every composition of `total` into parts.size()
// parts, each at least `minimum`, in lexicographic order.
template <class Visit>
void for_each_composition(int total, int minimum, std::vector<int>& parts, Visit&& visit) {
  const int count = static_cast<int>(parts.size());
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == count - 1) {
      parts[index] = remaining;
      visit(parts);
      return;
    }
    const int reserve = minimum * (count - 1 - index);
    for (int value = minimum; value <= remaining - reserve; ++value) {
      parts[index] = value;
      self(self, index + 1, remaining - value);
    }
  };
  if (count == 0 || total < minimum * count) return;
  recurse(recurse, 0, total);
}

}  // namespace

std::vector<LatticeOrbit> lattice_points(const SimplexBlock& block, int N) {
  const int E = block.edge_count();
  std::vector<LatticeOrbit> orbits;
  if (N < E) return orbits;
  std::map<std::vector<int>, std::uint64_t> counts;
  std::vector<int> parts(E);
  for_each_composition(N, 1, parts, [&](const std::vector<int>& n) {
    std::vector<int> best = n;
    for (const auto& p : block.edge_group) {
      auto image = permute_lengths<int>(p, n);
      if (image < best) best = std::move(image);
    }
    ++counts[best];
  });
  for (auto& [rep, count] : counts) orbits.push_back({rep, count});
  return orbits;
}

std::vector<LatticeOrbit> lattice_points(const TrivalentGraph& graph, int N) {
  return lattice_points(make_block(graph), N);
}

Rational EmpiricalMeasure::total_mass() const {
  Rational total = 0;
  for (const auto& atom : atoms) total += atom.weight;
  return total;
}

EmpiricalMeasure lattice_sigma(const SimplexBlock& block, int N) {
  EmpiricalMeasure measure;
  const auto orbits = lattice_points(block, N);
  if (orbits.empty()) return measure;
  const Rational unit = block.mass / Rational(binomial(N - 1, block.edge_count() - 1));
  for (const auto& orbit : orbits) {
    std::vector<Rational> lengths;
    for (int n : orbit.representative) lengths.push_back(make_rational(n, N));
    measure.atoms.push_back({ExactMetricGraph(block.graph, std::move(lengths)),
                             unit * Rational(BigInt(orbit.multiplicity))});
  }
  return measure;
}

EmpiricalMeasure lattice_sigma(const TrivalentGraph& graph, int N) { return lattice_sigma(make_block(graph), N); }

Rational lattice_expectation(const MeasureMixture& mixture, const Functional& f, int N) {
  if (!f.piecewise_linear) {
    throw Error(ErrorCode::Unsupported, "functional '" + f.name + "' has no exact piecewise-linear form");
  }
  Rational value = 0;
  for (const auto& wb : mixture.blocks) {
    const auto pl = f.piecewise_linear(*wb.block.graph);
    const auto sigma = lattice_sigma(wb.block, N);
    if (sigma.atoms.empty()) {
      throw Error(ErrorCode::InvalidArgument, "lattice resolution below the number of edges");
    }
    Rational integral = 0;
    for (const auto& atom : sigma.atoms) integral += atom.weight * pl(atom.point.lengths());
    value += wb.weight * integral / wb.block.mass;
  }
  return value;
}

OmegaCounts omega_counts(int k, int N, const std::function<bool(std::span<const Rational>)>& predicate) {
  if (k < 2) throw Error(ErrorCode::InvalidRank, "rank must be at least 2");
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be nonnegative");
  const int E = 3 * k - 3;
  OmegaCounts counts{binomial(N + E - 1, E - 1), 0};
  if (N == 0) return counts;
  std::vector<int> parts(E);
  std::vector<Rational> point(E);
  for_each_composition(N, 0, parts, [&](const std::vector<int>& n) {
    for (int e = 0; e < E; ++e) point[e] = make_rational(n[e], N);
    if (!predicate || predicate(point)) ++counts.accepted;
  });
  return counts;
}

}  // namespace covermeasure
