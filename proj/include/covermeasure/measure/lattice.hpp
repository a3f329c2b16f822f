#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "covermeasure/core/rational.hpp"
#include "covermeasure/measure/functional.hpp"
#include "covermeasure/measure/metric_graph.hpp"
#include "covermeasure/measure/mixture.hpp"

namespace covermeasure {

/// An orbit of positive compositions of N under the edge action.
struct LatticeOrbit {
  /// Lexicographically smallest member of the orbit.
  std::vector<int> representative;
  /// Orbit size.
  std::uint64_t multiplicity = 0;
};

/// Orbits of {n in Z_{>0}^E : sum n = N} under edge_action(X), sorted by
/// representative. Multiplicities sum to C(N-1, E-1); empty when N < E.
std::vector<LatticeOrbit> lattice_points(const SimplexBlock& block, int N);
std::vector<LatticeOrbit> lattice_points(const TrivalentGraph& graph, int N);

/// Finite weighted point set on moduli space.
struct EmpiricalMeasure {
  struct Atom {
    ExactMetricGraph point;
    Rational weight;
  };
  std::vector<Atom> atoms;

  Rational total_mass() const;
};

/// sigma_X^N: an atom at n/N per orbit, weighted mass * multiplicity /
/// C(N-1, E-1), so the total mass is |Triv|/|Aut| at every N >= E.
EmpiricalMeasure lattice_sigma(const SimplexBlock& block, int N);
EmpiricalMeasure lattice_sigma(const TrivalentGraph& graph, int N);

/// sum_X weight(X) * (integral of f against sigma_X^N) / mass(X): the
/// lattice analogue of expectation(). Requires `f.piecewise_linear`.
Rational lattice_expectation(const MeasureMixture& mixture, const Functional& f, int N);

struct OmegaCounts {
  BigInt total;
  BigInt accepted;
};

/// |Omega(N)|: nonnegative integer tuples of length 3k-3 with sum N, and
/// |Omega_A(N)|: those whose projectivization n/N satisfies `predicate`.
/// The zero tuple (N = 0) has no projectivization and is never accepted.
OmegaCounts omega_counts(int k, int N, const std::function<bool(std::span<const Rational>)>& predicate);

}  // namespace covermeasure
