// Two float64x2 registers stand in for the four reduction lanes of the
// reference order: lo = (s0, s1), hi = (s2, s3).
#include <arm_neon.h>

#include <cstdint>
#include <limits>

#include "covermeasure/simd/kernels.hpp"
#include "exp_constants.hpp"

namespace covermeasure::simd {

namespace {

using namespace detail;

inline double horizontal(float64x2_t lo, float64x2_t hi) {
  const float64x2_t pair = vaddq_f64(lo, hi);
  return vgetq_lane_f64(pair, 0) + vgetq_lane_f64(pair, 1);
}

inline float64x2_t exp_neon(float64x2_t y) {
  const uint64x2_t low_mask = vcltq_f64(y, vdupq_n_f64(kExpLow));
  const uint64x2_t high_mask = vcgtq_f64(y, vdupq_n_f64(kExpHigh));
  const float64x2_t clamped = vminq_f64(vmaxq_f64(y, vdupq_n_f64(kExpLow)), vdupq_n_f64(kExpHigh));
  const float64x2_t n = vrndnq_f64(vmulq_f64(clamped, vdupq_n_f64(kLog2e)));
  const float64x2_t neg_n = vnegq_f64(n);
  float64x2_t r = vfmaq_f64(clamped, neg_n, vdupq_n_f64(kLn2Hi));
  r = vfmaq_f64(r, neg_n, vdupq_n_f64(kLn2Lo));
  float64x2_t p = vdupq_n_f64(kExpCoefficients[0]);
  for (int i = 1; i < kExpCoefficientCount; ++i) p = vfmaq_f64(vdupq_n_f64(kExpCoefficients[i]), p, r);
  const int64x2_t n_int = vcvtq_s64_f64(n);
  const uint64x2_t bits = vshlq_n_u64(vreinterpretq_u64_s64(vaddq_s64(n_int, vdupq_n_s64(1023))), 52);
  float64x2_t result = vmulq_f64(p, vreinterpretq_f64_u64(bits));
  result = vreinterpretq_f64_u64(vbicq_u64(vreinterpretq_u64_f64(result), low_mask));
  result = vbslq_f64(high_mask, vdupq_n_f64(std::numeric_limits<double>::infinity()), result);
  return result;
}

double sum(const double* x, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vld1q_f64(x + i));
    hi = vaddq_f64(hi, vld1q_f64(x + i + 2));
  }
  double total = horizontal(lo, hi);
  for (; i < n; ++i) total += x[i];
  return total;
}

void sum_and_squares(const double* x, std::size_t n, double* out_sum, double* out_squares) {
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  float64x2_t sq_lo = vdupq_n_f64(0.0), sq_hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t a = vld1q_f64(x + i), b = vld1q_f64(x + i + 2);
    lo = vaddq_f64(lo, a);
    hi = vaddq_f64(hi, b);
    sq_lo = vaddq_f64(sq_lo, vmulq_f64(a, a));
    sq_hi = vaddq_f64(sq_hi, vmulq_f64(b, b));
  }
  double total = horizontal(lo, hi);
  double squares = horizontal(sq_lo, sq_hi);
  for (; i < n; ++i) {
    total += x[i];
    squares += x[i] * x[i];
  }
  *out_sum = total;
  *out_squares = squares;
}

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double total = horizontal(lo, hi);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void normalize_rows(double* data, std::size_t columns, std::size_t rows, std::size_t stride) {
  std::size_t i = 0;
  for (; i + 2 <= rows; i += 2) {
    float64x2_t total = vld1q_f64(data + i);
    for (std::size_t c = 1; c < columns; ++c) total = vaddq_f64(total, vld1q_f64(data + c * stride + i));
    for (std::size_t c = 0; c < columns; ++c) {
      double* p = data + c * stride + i;
      vst1q_f64(p, vdivq_f64(vld1q_f64(p), total));
    }
  }
  for (; i < rows; ++i) {
    double total = data[i];
    for (std::size_t c = 1; c < columns; ++c) total += data[c * stride + i];
    for (std::size_t c = 0; c < columns; ++c) data[c * stride + i] /= total;
  }
}

void min_affine_forms(const double* data, std::size_t columns, std::size_t rows, std::size_t stride,
                      const double* coefficients, const double* constants, std::size_t forms, double* out) {
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  for (; i + 2 <= rows; i += 2) {
    float64x2_t best = vdupq_n_f64(inf);
    for (std::size_t f = 0; f < forms; ++f) {
      float64x2_t value = vdupq_n_f64(constants[f]);
      const double* row = coefficients + f * columns;
      for (std::size_t c = 0; c < columns; ++c) {
        if (row[c] != 0.0) value = vaddq_f64(value, vmulq_f64(vdupq_n_f64(row[c]), vld1q_f64(data + c * stride + i)));
      }
      // value < best ? value : best, as in the reference.
      best = vbslq_f64(vcltq_f64(value, best), value, best);
    }
    vst1q_f64(out + i, best);
  }
  for (; i < rows; ++i) {
    double best = inf;
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
  const float64x2_t neg_s = vdupq_n_f64(-s);
  const float64x2_t shift_v = vdupq_n_f64(shift);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, exp_neon(vmulq_f64(neg_s, vsubq_f64(vld1q_f64(x + i), shift_v))));
  }
  for (; i < n; ++i) out[i] = kernel_exp(-s * (x[i] - shift));
}

double exp_neg_sum_below(const double* x, std::size_t n, double s, double limit) {
  const float64x2_t neg_s = vdupq_n_f64(-s);
  const float64x2_t limit_v = vdupq_n_f64(limit);
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  auto masked = [&](float64x2_t v) {
    const uint64x2_t keep = vcleq_f64(v, limit_v);
    return vreinterpretq_f64_u64(vandq_u64(keep, vreinterpretq_u64_f64(exp_neon(vmulq_f64(neg_s, v)))));
  };
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, masked(vld1q_f64(x + i)));
    hi = vaddq_f64(hi, masked(vld1q_f64(x + i + 2)));
  }
  double total = horizontal(lo, hi);
  for (; i < n; ++i) {
    if (x[i] <= limit) total += kernel_exp(-s * x[i]);
  }
  return total;
}

}  // namespace

const KernelTable* neon_kernels() noexcept {
  static const KernelTable table{
      Backend::Neon, &sum, &sum_and_squares, &dot, &normalize_rows, &min_affine_forms,
      &exp_neg_scaled, &exp_neg_sum_below,
  };
  return &table;
}

}  // namespace covermeasure::simd
