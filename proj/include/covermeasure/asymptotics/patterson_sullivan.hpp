#pragma once

#include <span>

#include <boost/math/special_functions/gamma.hpp>

#include "covermeasure/asymptotics/counting.hpp"

namespace covermeasure {

/// sum over lengths l <= L of e^{-s l}.
double ps_partial_sum(std::span<const double> lengths, double s, double L);

/// e^{-sL} N(L) + s * integral_0^L e^{-st} N(t) dt for the counting step
/// function N of `lengths`, integrated exactly between jumps.
double ps_via_stieltjes(std::span<const double> lengths, double s, double L);

/// s * integral_0^inf e^{-st} c t^{3k-4} e^t dt = s c Gamma(3k-3) / (s-1)^{3k-3}.
/// Throws Error(Divergent) for s <= 1.
template <class Real = double>
Real ps_model_closed_form(const CountingModel& model, Real s) {
  using std::pow;
  if (!(s > 1)) throw Error(ErrorCode::Divergent, "Poincare series diverges for s <= 1");
  const int edges = 3 * model.rank() - 3;
  return s * model.c<Real>() * boost::math::tgamma(Real(edges)) / pow(s - 1, edges);
}

}  // namespace covermeasure
