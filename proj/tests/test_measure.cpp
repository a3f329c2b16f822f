#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "covermeasure/core/error.hpp"
#include "covermeasure/graph/automorphism.hpp"
#include "covermeasure/graph/canonical.hpp"
#include "covermeasure/graph/enumerate.hpp"
#include "covermeasure/invariants/functionals.hpp"
#include "covermeasure/measure/integrate_exact.hpp"
#include "covermeasure/measure/integrate_mc.hpp"
#include "covermeasure/measure/lattice.hpp"
#include "covermeasure/measure/mixture.hpp"
#include "covermeasure/measure/sampler.hpp"
#include "oracles.hpp"

using namespace covermeasure;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

AffineForm form(std::vector<Rational> coefficients, Rational constant = 0) {
  return AffineForm{std::move(coefficients), std::move(constant)};
}

const WeightedBlock& named(const MeasureMixture& m, const std::string& name) {
  for (const auto& wb : m.blocks) {
    if (common_name(*wb.block.graph) == name) return wb;
  }
  throw std::runtime_error("no block " + name);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("limit measure weights") {
  const auto m = build_limit_measure(2);
  CHECK(named(m, "dumbbell").weight == q(3, 5));
  CHECK(named(m, "theta").weight == q(2, 5));
  CHECK(m.normalization == q(24, 5));
  CHECK(named(m, "dumbbell").block.mass == q(1, 2));
  CHECK(named(m, "theta").block.mass == q(1, 6));
  for (int k = 2; k <= 4; ++k) {
    const auto mk = build_limit_measure(k);
    Rational total = 0, reciprocal = 0;
    for (const auto& wb : mk.blocks) {
      total += wb.weight;
      reciprocal += q(1, static_cast<std::int64_t>(wb.block.aut_order));
      CHECK(wb.weight == q(1, static_cast<std::int64_t>(wb.block.aut_order)) * mk.normalization);
    }
    CHECK(total == 1);
    CHECK(mk.aut_reciprocal_sum() == reciprocal);
  }
  CHECK(code_of([] { build_limit_measure(1); }) == ErrorCode::InvalidRank);
}

TEST_CASE("exact simplex averages match a Riemann sum with mesh 1/200") {
  const std::vector<PiecewiseLinear> cases = {
      PiecewiseLinear{{form({1, 0, 0}), form({0, 1, 0})}},
      PiecewiseLinear{{form({1, 1, 0}), form({1, 0, 1}), form({0, 1, 1})}},
      PiecewiseLinear{{form({1, 0, 0}), form({0, 1, 0}), form({0, 0, 1})}},
      PiecewiseLinear{{form({1, 1, 1})}},
      PiecewiseLinear{{form({0, 0, 0}, q(3, 7))}},
      PiecewiseLinear{{form({1, 0, 0}), form({0, 2, 0})}},
      PiecewiseLinear{{form({1, 1, 0}), form({0, 0, q(1, 2)}, q(1, 10)), form({q(-1, 3), 1, 1}, q(1, 5))}},
  };
  for (const auto& pl : cases) {
    const double exact = to_double(simplex_average(pl, 3));
    const double riemann = oracle::riemann_average_3([&](std::span<const double> x) { return pl(x); }, 200);
    CHECK(std::fabs(exact - riemann) <= 2.0 / 200);
  }
}

TEST_CASE("block integrals of the rank-two systole") {
  const auto m = build_limit_measure(2);
  const auto& db = named(m, "dumbbell").block;
  const auto& th = named(m, "theta").block;
  const auto loops = integrate_exact_piecewise_linear(db, PiecewiseLinear{{form({1, 0, 0}), form({0, 1, 0})}});
  CHECK(loops.normalized == q(1, 6));
  CHECK(loops.sigma_integral == q(1, 12));
  const auto pairs = integrate_exact_piecewise_linear(
      th, PiecewiseLinear{{form({1, 1, 0}), form({1, 0, 1}), form({0, 1, 1})}});
  CHECK(pairs.normalized == q(7, 18));
  CHECK(pairs.sigma_integral == q(7, 108));
}

TEST_CASE("total length integrates to one on every block") {
  for (int k = 2; k <= 3; ++k) {
    for (const auto& wb : build_limit_measure(k).blocks) {
      PiecewiseLinear sum{{form(std::vector<Rational>(wb.block.edge_count(), Rational(1)))}};
      CHECK(integrate_exact_piecewise_linear(wb.block, sum).normalized == 1);
    }
  }
}

TEST_CASE("asymmetric functionals are rejected") {
  const auto db = make_block(dumbbell_graph());
  CHECK(code_of([&] { integrate_exact_piecewise_linear(db, PiecewiseLinear{{form({1, 0, 0})}}); }) ==
        ErrorCode::SymmetryViolation);
  const auto th = make_block(theta_graph());
  CHECK(code_of([&] {
          integrate_exact_piecewise_linear(th, PiecewiseLinear{{form({1, 1, 0}), form({0, 1, 1})}});
        }) == ErrorCode::SymmetryViolation);
  CHECK_NOTHROW(integrate_exact_piecewise_linear(db, PiecewiseLinear{{form({0, 0, 1})}}));
}

TEST_CASE("exact expectations") {
  const auto m2 = build_limit_measure(2);
  CHECK(expectation(m2, systole_functional()).value == q(23, 90));
  CHECK(expectation(m2, bridge_functional()).value == q(3, 5));
  CHECK(expectation(m2, constant_functional(1)).value == 1);
  // The minimum of E uniform spacings has mean 1/E^2.
  CHECK(expectation(m2, minedge_functional()).value == q(1, 9));
  CHECK(expectation(build_limit_measure(3), minedge_functional()).value == q(1, 36));

  Functional no_form = systole_functional();
  no_form.piecewise_linear = nullptr;
  CHECK(code_of([&] { expectation(m2, no_form); }) == ErrorCode::Unsupported);
}

TEST_CASE("rank-three systole: exact value against Monte Carlo") {
  const auto m3 = build_limit_measure(3);
  const double exact = to_double(expectation(m3, systole_functional()).value);
  const auto mc = integrate_mc(m3, systole_functional(), 200000, 11);
  CHECK(std::fabs(mc.estimate - exact) <= 4 * mc.standard_error);
}

TEST_CASE("lattice points and orbits") {
  const auto th = theta_graph();
  const auto db = dumbbell_graph();
  auto orbits = lattice_points(th, 3);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].representative == std::vector<int>{1, 1, 1});
  CHECK(orbits[0].multiplicity == 1);

  orbits = lattice_points(db, 4);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].representative == std::vector<int>{1, 1, 2});
  CHECK(orbits[0].multiplicity == 1);
  CHECK(orbits[1].representative == std::vector<int>{1, 2, 1});
  CHECK(orbits[1].multiplicity == 2);

  orbits = lattice_points(th, 4);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].representative == std::vector<int>{1, 1, 2});
  CHECK(orbits[0].multiplicity == 3);

  CHECK(lattice_points(th, 2).empty());
  CHECK(lattice_sigma(th, 2).atoms.empty());

  for (const auto& g : enumerate_trivalent(3)) {
    for (int N : {6, 7, 11}) {
      std::uint64_t total = 0;
      for (const auto& o : lattice_points(g, N)) total += o.multiplicity;
      CHECK(BigInt(total) == binomial(N - 1, g.edge_count() - 1));
    }
  }
}

TEST_CASE("lattice orbits agree with brute-force orbit computation") {
  const auto g = theta_graph();
  const auto group = edge_action(g);
  const int N = 9;
  std::map<std::vector<int>, std::uint64_t> brute;
  std::set<std::vector<int>> assigned;
  for (int a = 1; a < N; ++a) {
    for (int b = 1; a + b < N; ++b) {
      const std::vector<int> n{a, b, N - a - b};
      if (assigned.count(n)) continue;
      std::set<std::vector<int>> orbit;
      for (const auto& p : group) {
        std::vector<int> image(3);
        for (int e = 0; e < 3; ++e) image[p[e]] = n[e];
        orbit.insert(image);
      }
      assigned.insert(orbit.begin(), orbit.end());
      brute[*orbit.begin()] = orbit.size();
    }
  }
  std::map<std::vector<int>, std::uint64_t> ours;
  for (const auto& o : lattice_points(g, N)) ours[o.representative] = o.multiplicity;
  CHECK(ours == brute);
}

TEST_CASE("lattice measures carry mass |Triv|/|Aut| at every resolution") {
  for (int k = 2; k <= 3; ++k) {
    for (const auto& wb : build_limit_measure(k).blocks) {
      for (int N : {wb.block.edge_count(), wb.block.edge_count() + 1, 10, 17}) {
        const auto sigma = lattice_sigma(wb.block, N);
        CHECK(sigma.total_mass() == wb.block.mass);
        for (const auto& atom : sigma.atoms) {
          CHECK(atom.point.volume() == 1);
          for (const auto& x : atom.point.lengths()) CHECK(x > 0);
        }
      }
    }
  }
  CHECK(lattice_sigma(dumbbell_graph(), 5).total_mass() == q(1, 2));
  CHECK(lattice_sigma(theta_graph(), 5).total_mass() == q(1, 6));
}

TEST_CASE("lattice expectations converge to the exact systole") {
  const auto m = build_limit_measure(2);
  const Rational exact = q(23, 90);
  std::vector<double> errors;
  for (int N : {30, 60, 120}) {
    Rational diff = lattice_expectation(m, systole_functional(), N) - exact;
    if (diff < 0) diff = -diff;
    errors.push_back(to_double(diff));
  }
  CHECK(errors[1] < errors[0]);
  CHECK(errors[2] < errors[1]);
  CHECK(errors[2] <= 0.75 * errors[1]);
  CHECK(lattice_expectation(m, constant_functional(1), 7) == 1);
}

TEST_CASE("omega counts") {
  const auto always = [](std::span<const Rational>) { return true; };
  auto c = omega_counts(2, 2, always);
  CHECK(c.total == 6);
  CHECK(c.accepted == 6);
  c = omega_counts(2, 0, always);
  CHECK(c.total == 1);
  CHECK(c.accepted == 0);
  c = omega_counts(3, 7, nullptr);
  CHECK(c.total == binomial(12, 5));
  CHECK(c.accepted == c.total);
  // Projectivized first coordinate above one half.
  c = omega_counts(2, 10, [](std::span<const Rational> x) { return x[0] > make_rational(1, 2); });
  CHECK(c.accepted == 15);  // n0 in 6..10: 5+4+3+2+1 ways
  const int K = 1000;
  const double ratio = to_double(Rational(omega_counts(2, K, nullptr).total)) / (double(K) * K / 2);
  CHECK(std::fabs(ratio - 1) < 0.01);
  CHECK(code_of([&] { omega_counts(1, 3, always); }) == ErrorCode::InvalidRank);
}

TEST_CASE("sampler draws points of the open simplex deterministically") {
  const auto m = build_limit_measure(2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = sample(m, seed);
    double total = 0;
    for (double x : p.lengths()) {
      CHECK(x > 0);
      total += x;
    }
    CHECK(std::fabs(total - 1) <= 1e-12);
  }
  const auto a = sample(m, 7), b = sample(m, 7);
  CHECK(std::equal(a.lengths().begin(), a.lengths().end(), b.lengths().begin()));
  CHECK(&a.graph() == &b.graph());

  const auto many = sample_many(m, 1000, 3, 128);
  const auto again = sample_many(m, 1000, 3, 128);
  for (std::size_t i = 0; i < many.size(); ++i) {
    CHECK(std::equal(many[i].lengths().begin(), many[i].lengths().end(), again[i].lengths().begin()));
  }
}

TEST_CASE("sampled coordinates are exchangeable under the edge action") {
  const auto m = build_limit_measure(2);
  const auto points = sample_many(m, 60000, 5);
  std::map<std::string, std::vector<std::vector<double>>> columns;
  for (const auto& p : points) {
    auto& cols = columns[common_name(p.graph())];
    cols.resize(3);
    for (int e = 0; e < 3; ++e) cols[e].push_back(p.lengths()[e]);
  }
  const auto& th = columns["theta"];
  CHECK(oracle::ks_two_sample_pvalue(th[0], th[1]) > 0.001);
  CHECK(oracle::ks_two_sample_pvalue(th[0], th[2]) > 0.001);
  const auto& db = columns["dumbbell"];
  CHECK(oracle::ks_two_sample_pvalue(db[0], db[1]) > 0.001);
}

TEST_CASE("Monte Carlo integration") {
  const auto m = build_limit_measure(2);
  CHECK(code_of([&] { integrate_mc(m, systole_functional(), 1, 0); }) == ErrorCode::InvalidSampleCount);

  const auto one = integrate_mc(m, constant_functional(1), 12345, 0);
  CHECK(one.estimate == 1.0);
  CHECK(one.standard_error == 0.0);

  const auto bridge = integrate_mc(m, bridge_functional(), 200000, 1);
  CHECK(std::fabs(bridge.estimate - 0.6) <= 3 * bridge.standard_error);

  const auto sys = integrate_mc(m, systole_functional(), 200000, 2);
  CHECK(std::fabs(sys.estimate - 23.0 / 90) <= 3 * sys.standard_error);
  CHECK(sys.block_counts[0] + sys.block_counts[1] == 200000);
}

TEST_CASE("Monte Carlo results depend only on seed, count and chunk layout") {
  const auto m = build_limit_measure(2);
  const auto a = integrate_mc(m, systole_functional(), 100000, 9, 4096, 1);
  const auto b = integrate_mc(m, systole_functional(), 100000, 9, 4096, 4);
  CHECK(a.estimate == b.estimate);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.block_counts == b.block_counts);
  const auto c = integrate_mc(m, systole_functional(), 100000, 10, 4096, 1);
  CHECK(a.estimate != c.estimate);

  Functional evaluate_only = systole_functional();
  evaluate_only.piecewise_linear = nullptr;
  const auto d = integrate_mc(m, evaluate_only, 100000, 9, 4096, 1);
  CHECK(std::fabs(a.estimate - d.estimate) < 1e-12);
}
