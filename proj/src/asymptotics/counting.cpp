#include "covermeasure/asymptotics/counting.hpp"

#include "covermeasure/measure/mixture.hpp"

namespace covermeasure {

CountingModel::CountingModel(int genus, int rank, Rational aut_reciprocal_sum)
    : genus_(genus), rank_(rank), aut_reciprocal_sum_(std::move(aut_reciprocal_sum)) {
  if (genus < 2) throw Error(ErrorCode::InvalidArgument, "genus must be at least 2");
  if (rank < 2) throw Error(ErrorCode::InvalidRank, "rank must be at least 2");
  if (!(aut_reciprocal_sum_ > 0)) throw Error(ErrorCode::InvalidArgument, "automorphism sum must be positive");
}

CountingModel::CountingModel(int genus, int rank)
    : CountingModel(genus, rank, rank >= 2 ? build_limit_measure(rank).aut_reciprocal_sum() : Rational(0)) {}

double huber_count(double L) {
  if (!(L > 0)) throw Error(ErrorCode::InvalidArgument, "L must be positive");
  return std::exp(L) / (2 * L);
}

}  // namespace covermeasure
