#include "covermeasure/invariants/pants.hpp"

#include <cmath>
#include <utility>

#include "covermeasure/core/error.hpp"

namespace covermeasure {

PantsBoundary::PantsBoundary(double a, double b, double c) : l1(a), l2(b), l3(c) {
  if (!(a > 0 && b > 0 && c > 0) || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::InvalidArgument, "pants boundary lengths must be positive and finite");
  }
}

PantsBoundary pants_boundary_from_dumbbell(double x, double y, double z) {
  if (!(x > 0 && y > 0 && z > 0)) throw Error(ErrorCode::InvalidArgument, "dumbbell lengths must be positive");
  return PantsBoundary(x, y, x + y + 2 * z);
}

double separating_orthogeodesic_length(const PantsBoundary& b) {
  const PantsBoundary checked(b.l1, b.l2, b.l3);
  // Half-boundaries of one of the two congruent right-angled hexagons.
  const long double a1 = checked.l1 / 2.0L, a2 = checked.l2 / 2.0L, a3 = checked.l3 / 2.0L;
  // Distance along side a3 from the foot of the perpendicular to side a1
  // to the foot of the orthogeodesic.
  const long double x = std::atanh(std::cosh(a1) * std::sinh(a3) / (std::cosh(a2) + std::cosh(a1) * std::cosh(a3)));
  return static_cast<double>(2.0L * std::asinh(std::cosh(a1) / std::sinh(x)));
}

double translation_length(const std::array<std::array<double, 2>, 2>& m) {
  const double half_trace = std::fabs(m[0][0] + m[1][1]) / 2;
  if (!(half_trace > 1)) throw Error(ErrorCode::InfeasibleGeometry, "matrix is not hyperbolic");
  return 2 * std::acosh(half_trace);
}

namespace {

using Matrix = std::array<std::array<long double, 2>, 2>;

Matrix multiply(const Matrix& x, const Matrix& y) {
  Matrix out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return out;
}

std::pair<long double, long double> fixed_points(const Matrix& m) {
  const long double trace = m[0][0] + m[1][1];
  const long double disc = trace * trace - 4;
  if (!(disc > 0) || m[1][0] == 0) throw Error(ErrorCode::InfeasibleGeometry, "axis endpoints not finite");
  const long double root = std::sqrt(disc);
  return {(m[0][0] - m[1][1] + root) / (2 * m[1][0]), (m[0][0] - m[1][1] - root) / (2 * m[1][0])};
}

}  // namespace

double matrix_pants_oracle(const PantsBoundary& b) {
  const PantsBoundary checked(b.l1, b.l2, b.l3);
  // A translates along the imaginary axis by l1. B has trace 2cosh(l2/2)
  // and AB has trace -2cosh(l3/2), the sign that makes <A, B> a pants group.
  const long double lambda = std::exp(checked.l1 / 2.0L);
  const long double t2 = 2 * std::cosh(checked.l2 / 2.0L);
  const long double t3 = 2 * std::cosh(checked.l3 / 2.0L);
  const long double p = (-t3 - t2 / lambda) / (lambda - 1 / lambda);
  const long double s = t2 - p;
  const long double off = p * s - 1;
  if (!std::isfinite(off) || off == 0) throw Error(ErrorCode::InfeasibleGeometry, "trace conditions not realizable");
  const long double q = std::sqrt(std::fabs(off));
  const long double r = off / q;
  const Matrix A{{{lambda, 0}, {0, 1 / lambda}}};
  const Matrix B{{{p, q}, {r, s}}};

  const auto [a, bb] = fixed_points(multiply(A, B));
  const auto [c, d] = fixed_points(multiply(B, A));
  // Send axis(AB) to the imaginary axis; then cosh(dist) = |c'+d'|/|c'-d'|.
  const long double c1 = (c - a) / (c - bb), d1 = (d - a) / (d - bb);
  const long double ratio = std::fabs(c1 + d1) / std::fabs(c1 - d1);
  if (!(ratio >= 1) || !std::isfinite(ratio)) throw Error(ErrorCode::InfeasibleGeometry, "axes intersect");
  return static_cast<double>(std::acosh(ratio));
}

}  // namespace covermeasure
