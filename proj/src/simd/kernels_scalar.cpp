#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

#include "covermeasure/simd/kernels.hpp"
#include "exp_constants.hpp"

namespace covermeasure::simd {

namespace {

using namespace detail;

double exp_scalar(double y) noexcept {
  if (y < kExpLow) return 0.0;
  if (y > kExpHigh) return std::numeric_limits<double>::infinity();
  const double n = std::nearbyint(y * kLog2e);
  double r = std::fma(-n, kLn2Hi, y);
  r = std::fma(-n, kLn2Lo, r);
  double p = kExpCoefficients[0];
  for (int i = 1; i < kExpCoefficientCount; ++i) p = std::fma(p, r, kExpCoefficients[i]);
  // Same integer extraction as the vector backends.
  const double shifted = n + kRoundMagic;
  std::int64_t shifted_bits, magic_bits;
  std::memcpy(&shifted_bits, &shifted, sizeof shifted);
  std::memcpy(&magic_bits, &kRoundMagic, sizeof kRoundMagic);
  const std::uint64_t scale_bits = static_cast<std::uint64_t>(shifted_bits - magic_bits + 1023) << 52;
  double scale;
  std::memcpy(&scale, &scale_bits, sizeof scale);
  return p * scale;
}

double combine(const double acc[4]) { return (acc[0] + acc[2]) + (acc[1] + acc[3]); }

double sum(const double* x, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int j = 0; j < 4; ++j) acc[j] += x[i + j];
  }
  double total = combine(acc);
  for (; i < n; ++i) total += x[i];
  return total;
}

void sum_and_squares(const double* x, std::size_t n, double* out_sum, double* out_squares) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  double sq[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int j = 0; j < 4; ++j) {
      const double v = x[i + j];
      acc[j] += v;
      sq[j] += v * v;
    }
  }
  double total = combine(acc);
  double squares = combine(sq);
  for (; i < n; ++i) {
    total += x[i];
    squares += x[i] * x[i];
  }
  *out_sum = total;
  *out_squares = squares;
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int j = 0; j < 4; ++j) acc[j] += a[i + j] * b[i + j];
  }
  double total = combine(acc);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void normalize_rows(double* data, std::size_t columns, std::size_t rows, std::size_t stride) {
  for (std::size_t i = 0; i < rows; ++i) {
    double total = data[i];
    for (std::size_t c = 1; c < columns; ++c) total += data[c * stride + i];
    for (std::size_t c = 0; c < columns; ++c) data[c * stride + i] /= total;
  }
}

void min_affine_forms(const double* data, std::size_t columns, std::size_t rows, std::size_t stride,
                      const double* coefficients, const double* constants, std::size_t forms, double* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < forms; ++f) {
      double value = constants[f];
      const double* row = coefficients + f * columns;
      for (std::size_t c = 0; c < columns; ++c) {
        if (row[c] != 0.0) value = value + row[c] * data[c * stride + i];
      }
      best = value < best ? value : best;
    }
    out[i] = best;
  }
}

void exp_neg_scaled(const double* x, std::size_t n, double s, double shift, double* out) {
  const double neg_s = -s;
  for (std::size_t i = 0; i < n; ++i) out[i] = exp_scalar(neg_s * (x[i] - shift));
}

double exp_neg_sum_below(const double* x, std::size_t n, double s, double limit) {
  const double neg_s = -s;
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int j = 0; j < 4; ++j) {
      const double v = x[i + j];
      acc[j] += v <= limit ? exp_scalar(neg_s * v) : 0.0;
    }
  }
  double total = combine(acc);
  for (; i < n; ++i) {
    if (x[i] <= limit) total += exp_scalar(neg_s * x[i]);
  }
  return total;
}

}  // namespace

double kernel_exp(double y) noexcept { return exp_scalar(y); }

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{
      Backend::Scalar, &sum, &sum_and_squares, &dot, &normalize_rows, &min_affine_forms,
      &exp_neg_scaled, &exp_neg_sum_below,
  };
  return table;
}

}  // namespace covermeasure::simd
