#pragma once

#include <cmath>
#include <span>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "covermeasure/core/error.hpp"
#include "covermeasure/core/rational.hpp"
#include "covermeasure/graph/trivalent_graph.hpp"

namespace covermeasure {

/// 50 significant digits, for oracle comparisons.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

template <class Real>
Real rational_as(const Rational& q) {
  return boost::multiprecision::numerator(q).template convert_to<Real>() /
         boost::multiprecision::denominator(q).template convert_to<Real>();
}

/// Genus g, rank k and the constants of the subgroup counting asymptotic
/// c_{g,k} L^{3k-4} e^L. Every quantity is available in double or in
/// HighPrecision.
class CountingModel {
 public:
  /// Enumerates rank-k types to obtain sum 1/|Aut X|.
  CountingModel(int genus, int rank);
  CountingModel(int genus, int rank, Rational aut_reciprocal_sum);

  int genus() const noexcept { return genus_; }
  int rank() const noexcept { return rank_; }
  const Rational& aut_reciprocal_sum() const noexcept { return aut_reciprocal_sum_; }

  /// vol(T^1 Sigma) = 8 pi^2 (g - 1).
  template <class Real = double>
  Real unit_tangent_volume() const {
    return 8 * pi<Real>() * pi<Real>() * (genus_ - 1);
  }

  /// c'_{g,k} = (4/3)^{3-3k} (pi^2 (g-1))^{1-k}.
  template <class Real = double>
  Real c_prime() const {
    using std::pow;
    const Real four_thirds = Real(4) / 3;
    return pow(four_thirds, 3 - 3 * rank_) * pow(pi<Real>() * pi<Real>() * (genus_ - 1), 1 - rank_);
  }

  /// c_{g,k} = (sum 1/|Aut X|) c'_{g,k} / (3k-4)!.
  template <class Real = double>
  Real c() const {
    return rational_as<Real>(aut_reciprocal_sum_) * c_prime<Real>() /
           factorial(3 * rank_ - 4).template convert_to<Real>();
  }

 private:
  template <class Real>
  static Real pi() {
    return boost::math::constants::pi<Real>();
  }

  int genus_;
  int rank_;
  Rational aut_reciprocal_sum_;
};

/// e^L / (2L), the prime geodesic count.
double huber_count(double L);

/// c_{g,k} L^{3k-4} e^L.
template <class Real = double>
Real subgroup_count_asymptotic(const CountingModel& model, Real L) {
  using std::exp;
  using std::pow;
  if (!(L > 0)) throw Error(ErrorCode::InvalidArgument, "L must be positive");
  return model.c<Real>() * pow(L, 3 * model.rank() - 4) * exp(L);
}

/// Critical graph maps of type X of total length at most L:
/// (2/3)^{3 chi} (8 pi^2 (g-1))^chi / (-3 chi - 1)! L^{-3 chi - 1} e^L.
template <class Real = double>
Real crit_count_asymptotic(const TrivalentGraph& graph, int genus, Real L) {
  using std::exp;
  using std::pow;
  if (genus < 2) throw Error(ErrorCode::InvalidArgument, "genus must be at least 2");
  if (!(L > 0)) throw Error(ErrorCode::InvalidArgument, "L must be positive");
  const int chi = graph.euler_characteristic();
  const Real pi = boost::math::constants::pi<Real>();
  return pow(Real(2) / 3, 3 * chi) * pow(8 * pi * pi * (genus - 1), chi) /
         factorial(-3 * chi - 1).template convert_to<Real>() * pow(L, -3 * chi - 1) * exp(L);
}

/// Critical maps whose edge lengths lie in the box corner + [0, h)^E:
/// 2^{4 chi} 3^{-3 chi} pi^chi (e^h - 1)^{-3 chi} e^{|corner|} / vol^{-chi},
/// vol = 4 pi (g - 1). Depends on the corner only through its L1 norm.
template <class Real = double>
Real crit_box_asymptotic(const TrivalentGraph& graph, int genus, std::span<const Real> corner, Real h) {
  using std::exp;
  using std::expm1;
  using std::pow;
  if (genus < 2) throw Error(ErrorCode::InvalidArgument, "genus must be at least 2");
  if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "box width must be positive");
  if (static_cast<int>(corner.size()) != graph.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "expected one corner coordinate per edge");
  }
  Real norm = 0;
  for (const Real& x : corner) {
    if (!(x > 0)) throw Error(ErrorCode::InvalidArgument, "box corner must be positive");
    norm += x;
  }
  const int chi = graph.euler_characteristic();
  const Real pi = boost::math::constants::pi<Real>();
  const Real volume = 4 * pi * (genus - 1);
  return pow(Real(2), 4 * chi) * pow(Real(3), -3 * chi) * pow(pi, chi) * pow(expm1(h), -3 * chi) * exp(norm) /
         pow(volume, -chi);
}

}  // namespace covermeasure
