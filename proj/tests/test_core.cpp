#include <doctest.h>

#include <set>

#include "covermeasure/core/error.hpp"
#include "covermeasure/core/rational.hpp"
#include "covermeasure/core/rng.hpp"

using namespace covermeasure;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/5") == make_rational(3, 5));
  CHECK(parse_rational("6/10") == make_rational(3, 5));
  CHECK(parse_rational("0.125") == make_rational(1, 8));
  CHECK(parse_rational("-3.5e-2") == make_rational(-7, 200));
  CHECK(parse_rational("42") == 42);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(to_string(make_rational(23, 90)) == "23/90");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_double(make_rational(1, 3)) == 1.0 / 3);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("random streams") {
  Rng a(5), b(5), c(6);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.bits();
    CHECK(x == b.bits());
    (void)c.bits();
  }
  CHECK(Rng(5).bits() != Rng(6).bits());
  std::set<std::uint64_t> seeds;
  for (std::uint64_t chunk = 0; chunk < 1000; ++chunk) seeds.insert(derive_stream_seed(7, chunk));
  CHECK(seeds.size() == 1000);

  Rng r(1);
  double mean = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform_open();
    CHECK_UNARY(u > 0);
    CHECK_UNARY(u < 1);
    mean += r.exponential();
  }
  CHECK(mean / n == doctest::Approx(1).epsilon(0.01));
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}
