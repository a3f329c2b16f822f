#include "covermeasure/asymptotics/patterson_sullivan.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "covermeasure/simd/kernels.hpp"

namespace covermeasure {

double ps_partial_sum(std::span<const double> lengths, double s, double L) {
  return simd::active_kernels().exp_neg_sum_below(lengths.data(), lengths.size(), s, L);
}

double ps_via_stieltjes(std::span<const double> lengths, double s, double L) {
  std::vector<double> jumps;
  for (double l : lengths) {
    if (l <= L) jumps.push_back(l);
  }
  std::sort(jumps.begin(), jumps.end());
  const double count = static_cast<double>(jumps.size());
  double total = count * std::exp(-s * L);
  // N(t) = j on [jumps[j-1], jumps[j]); s * e^{-st} integrated there is
  // e^{-s a} (1 - e^{-s (b - a)}).
  for (std::size_t j = 1; j <= jumps.size(); ++j) {
    const double a = jumps[j - 1];
    const double b = j < jumps.size() ? jumps[j] : L;
    total += static_cast<double>(j) * std::exp(-s * a) * -std::expm1(-s * (b - a));
  }
  return total;
}

}  // namespace covermeasure
