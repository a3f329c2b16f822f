#include "covermeasure/asymptotics/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/math/tools/toms748_solve.hpp>

#include "covermeasure/core/rng.hpp"
#include "covermeasure/measure/sampler.hpp"
#include "covermeasure/simd/kernels.hpp"

namespace covermeasure {

namespace {

std::size_t choose_block(const MeasureMixture& mixture, Rng& rng) {
  const double u = rng.uniform_open();
  Rational running = 0;
  for (std::size_t b = 0; b + 1 < mixture.blocks.size(); ++b) {
    running += mixture.blocks[b].weight;
    if (u < to_double(running)) return b;
  }
  return mixture.blocks.size() - 1;
}

// Uniform composition of N into E positive parts, as lengths n/N.
std::vector<double> lattice_marker(int N, int E, Rng& rng) {
  // Floyd's sampling of E-1 distinct cut points from {1, ..., N-1}.
  std::set<int> cuts;
  for (int j = N - E + 1; j <= N - 1; ++j) {
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(j)));
    if (!cuts.insert(t).second) cuts.insert(j);
  }
  std::vector<double> lengths;
  int previous = 0;
  for (int cut : cuts) {
    lengths.push_back(static_cast<double>(cut - previous) / N);
    previous = cut;
  }
  lengths.push_back(static_cast<double>(N - previous) / N);
  return lengths;
}

}  // namespace

std::vector<SyntheticSubgroup> synthesize_ensemble(const CountingModel& model, const MeasureMixture& mixture,
                                                   const EnsembleOptions& options) {
  if (!(options.L_max > 0) || !std::isfinite(options.L_max)) {
    throw Error(ErrorCode::InvalidArgument, "L_max must be positive and finite");
  }
  if (options.cap == 0) throw Error(ErrorCode::InvalidArgument, "ensemble cap must be positive");
  if (mixture.rank != model.rank() || mixture.blocks.empty()) {
    throw Error(ErrorCode::InvalidArgument, "mixture rank does not match the counting model");
  }
  const int power = 3 * model.rank() - 4;
  const double log_c = std::log(model.c());
  auto log_count = [&](double t) { return log_c + power * std::log(t) + t; };
  if (log_count(options.L_max) < 0) {
    throw Error(ErrorCode::InvalidArgument, "L_max too small: expected ensemble size below one");
  }
  const int E = mixture.blocks.front().block.edge_count();

  Rng arrivals(options.seed);
  Rng markers(derive_stream_seed(options.seed, 1));
  std::vector<SyntheticSubgroup> ensemble;
  double gamma = 0;
  double previous = 0;
  const double t_floor = 1e-12;
  while (ensemble.size() < options.cap) {
    gamma += arrivals.exponential();
    const double target = std::log(gamma);
    if (target > log_count(options.L_max)) break;
    double lower = std::max(previous, t_floor);
    double t = lower;
    if (log_count(lower) < target) {
      auto f = [&](double x) { return log_count(x) - target; };
      boost::uintmax_t iterations = 200;
      const auto bracket = boost::math::tools::toms748_solve(f, lower, options.L_max,
                                                             boost::math::tools::eps_tolerance<double>(50),
                                                             iterations);
      t = (bracket.first + bracket.second) / 2;
    }
    previous = t;

    const std::size_t b = choose_block(mixture, markers);
    std::vector<double> lengths;
    if (options.mode == MarkerMode::Exact) {
      lengths.resize(E);
      for (double& x : lengths) x = markers.exponential();
      double total = 0;
      for (double x : lengths) total += x;
      for (double& x : lengths) x /= total;
    } else {
      const int N = std::max(static_cast<int>(std::ceil(t)), E);
      lengths = lattice_marker(N, E, markers);
    }
    ensemble.push_back({t, MetricGraph(mixture.blocks[b].block.graph, std::move(lengths))});
  }
  return ensemble;
}

double ps_measure_expectation(const std::vector<SyntheticSubgroup>& ensemble, const Functional& f, double s) {
  if (ensemble.empty()) throw Error(ErrorCode::EmptyEnsemble, "empty ensemble");
  if (!(s > 1)) throw Error(ErrorCode::InvalidArgument, "s must exceed the critical exponent 1");
  if (!f.evaluate) throw Error(ErrorCode::InvalidArgument, "functional has no evaluator");
  std::vector<double> lengths, values;
  for (const auto& point : ensemble) {
    lengths.push_back(point.length);
    values.push_back(f.evaluate(point.marker.graph(), point.marker.lengths()));
  }
  // Shifting by the shortest length only rescales numerator and denominator.
  const double shortest = *std::min_element(lengths.begin(), lengths.end());
  std::vector<double> weights(lengths.size());
  const auto& kernels = simd::active_kernels();
  kernels.exp_neg_scaled(lengths.data(), lengths.size(), s, shortest, weights.data());
  return kernels.dot(weights.data(), values.data(), values.size()) / kernels.sum(weights.data(), weights.size());
}

double expected_systole_line(double L, int rank) {
  if (rank != 2) throw Error(ErrorCode::Unsupported, "closed form known for rank 2 only; use expectation() * L");
  if (!(L > 0)) throw Error(ErrorCode::InvalidArgument, "L must be positive");
  return 23.0 * L / 90.0;
}

}  // namespace covermeasure
