#pragma once

#include <cstdint>
#include <vector>

#include "covermeasure/asymptotics/counting.hpp"
#include "covermeasure/measure/functional.hpp"
#include "covermeasure/measure/metric_graph.hpp"
#include "covermeasure/measure/mixture.hpp"

namespace covermeasure {

/// A stand-in for one rank-k subgroup: its length and the projectivized
/// metric graph it carries.
struct SyntheticSubgroup {
  double length;
  MetricGraph marker;
};

enum class MarkerMode {
  /// Markers drawn from m_k.
  Exact,
  /// Markers drawn from the lattice measures at resolution max(ceil(l), E).
  Lattice,
};

struct EnsembleOptions {
  double L_max = 0;
  MarkerMode mode = MarkerMode::Exact;
  std::uint64_t seed = 0;
  std::size_t cap = 100000;
};

/// Arrival times of a Poisson process with mean function
/// N(t) = c_{g,k} t^{3k-4} e^t on (0, L_max], in increasing order, found by
/// inverting N on unit-rate arrivals. Generation stops at L_max or after
/// `cap` points (keeping the shortest). `mixture` must be m_k for the
/// model's rank.
std::vector<SyntheticSubgroup> synthesize_ensemble(const CountingModel& model, const MeasureMixture& mixture,
                                                   const EnsembleOptions& options);

/// sum e^{-s l_i} f(marker_i) / sum e^{-s l_i}. Requires s > 1; throws
/// Error(EmptyEnsemble) on an empty ensemble.
double ps_measure_expectation(const std::vector<SyntheticSubgroup>& ensemble, const Functional& f, double s);

/// (23/90) L, the expected systole at length L for rank 2. Other ranks
/// throw Error(Unsupported).
double expected_systole_line(double L, int rank = 2);

}  // namespace covermeasure
