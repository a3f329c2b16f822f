#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "covermeasure/simd/kernels.hpp"
#include "exp_constants.hpp"

namespace covermeasure::simd {

namespace {

using namespace detail;

inline double horizontal(__m256d acc) {
  // (s0 + s2) + (s1 + s3), matching the scalar reference.
  const __m128d low = _mm256_castpd256_pd128(acc);
  const __m128d high = _mm256_extractf128_pd(acc, 1);
  const __m128d pair = _mm_add_pd(low, high);
  return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

inline __m256d exp_avx2(__m256d y) {
  const __m256d low_mask = _mm256_cmp_pd(y, _mm256_set1_pd(kExpLow), _CMP_LT_OQ);
  const __m256d high_mask = _mm256_cmp_pd(y, _mm256_set1_pd(kExpHigh), _CMP_GT_OQ);
  const __m256d clamped = _mm256_min_pd(_mm256_max_pd(y, _mm256_set1_pd(kExpLow)), _mm256_set1_pd(kExpHigh));

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(clamped, _mm256_set1_pd(kLog2e)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d neg_n = _mm256_sub_pd(_mm256_setzero_pd(), n);
  __m256d r = _mm256_fmadd_pd(neg_n, _mm256_set1_pd(kLn2Hi), clamped);
  r = _mm256_fmadd_pd(neg_n, _mm256_set1_pd(kLn2Lo), r);
  __m256d p = _mm256_set1_pd(kExpCoefficients[0]);
  for (int i = 1; i < kExpCoefficientCount; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kExpCoefficients[i]));

  const __m256d magic = _mm256_set1_pd(kRoundMagic);
  const __m256i n_int = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(n, magic)), _mm256_castpd_si256(magic));
  const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(n_int, _mm256_set1_epi64x(1023)), 52);
  __m256d result = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));

  result = _mm256_andnot_pd(low_mask, result);
  result = _mm256_blendv_pd(result, _mm256_set1_pd(std::numeric_limits<double>::infinity()), high_mask);
  return result;
}

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double total = horizontal(acc);
  for (; i < n; ++i) total += x[i];
  return total;
}

void sum_and_squares(const double* x, std::size_t n, double* out_sum, double* out_squares) {
  __m256d acc = _mm256_setzero_pd();
  __m256d sq = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, v);
    sq = _mm256_add_pd(sq, _mm256_mul_pd(v, v));
  }
  double total = horizontal(acc);
  double squares = horizontal(sq);
  for (; i < n; ++i) {
    total += x[i];
    squares += x[i] * x[i];
  }
  *out_sum = total;
  *out_squares = squares;
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  double total = horizontal(acc);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void normalize_rows(double* data, std::size_t columns, std::size_t rows, std::size_t stride) {
  std::size_t i = 0;
  for (; i + 4 <= rows; i += 4) {
    __m256d total = _mm256_loadu_pd(data + i);
    for (std::size_t c = 1; c < columns; ++c) total = _mm256_add_pd(total, _mm256_loadu_pd(data + c * stride + i));
    for (std::size_t c = 0; c < columns; ++c) {
      double* p = data + c * stride + i;
      _mm256_storeu_pd(p, _mm256_div_pd(_mm256_loadu_pd(p), total));
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
  for (; i + 4 <= rows; i += 4) {
    __m256d best = _mm256_set1_pd(inf);
    for (std::size_t f = 0; f < forms; ++f) {
      __m256d value = _mm256_set1_pd(constants[f]);
      const double* row = coefficients + f * columns;
      for (std::size_t c = 0; c < columns; ++c) {
        if (row[c] != 0.0) {
          value = _mm256_add_pd(value, _mm256_mul_pd(_mm256_set1_pd(row[c]), _mm256_loadu_pd(data + c * stride + i)));
        }
      }
      best = _mm256_min_pd(value, best);
    }
    _mm256_storeu_pd(out + i, best);
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
  const __m256d neg_s = _mm256_set1_pd(-s);
  const __m256d shift_v = _mm256_set1_pd(shift);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d y = _mm256_mul_pd(neg_s, _mm256_sub_pd(_mm256_loadu_pd(x + i), shift_v));
    _mm256_storeu_pd(out + i, exp_avx2(y));
  }
  for (; i < n; ++i) out[i] = kernel_exp(-s * (x[i] - shift));
}

double exp_neg_sum_below(const double* x, std::size_t n, double s, double limit) {
  const __m256d neg_s = _mm256_set1_pd(-s);
  const __m256d limit_v = _mm256_set1_pd(limit);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d keep = _mm256_cmp_pd(v, limit_v, _CMP_LE_OQ);
    acc = _mm256_add_pd(acc, _mm256_and_pd(keep, exp_avx2(_mm256_mul_pd(neg_s, v))));
  }
  double total = horizontal(acc);
  for (; i < n; ++i) {
    if (x[i] <= limit) total += kernel_exp(-s * x[i]);
  }
  return total;
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const KernelTable table{
      Backend::Avx2, &sum, &sum_and_squares, &dot, &normalize_rows, &min_affine_forms,
      &exp_neg_scaled, &exp_neg_sum_below,
  };
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &table : nullptr;
}

}  // namespace covermeasure::simd
