#pragma once

#include <cstddef>
#include <string_view>

namespace covermeasure::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend backend) noexcept;

// Data-parallel inner loops used by the Monte Carlo and Patterson-Sullivan
// code. Every backend evaluates in the same operation order:
//   * reductions keep four partial sums, lane j taking elements i = j mod 4,
//     combined as (s0 + s2) + (s1 + s3), followed by the tail in order;
//   * no fused multiply-add except inside exp, which uses fma everywhere;
// so all backends return bit-identical results. Matrices are column-major
// ("structure of arrays"): element (row i, column c) is data[c * stride + i].
struct KernelTable {
  Backend backend;

  double (*sum)(const double* x, std::size_t n);
  /// Writes sum(x) and sum(x*x).
  void (*sum_and_squares)(const double* x, std::size_t n, double* sum, double* squares);
  double (*dot)(const double* a, const double* b, std::size_t n);

  /// Divides every row by its sum; the row sum adds columns in order.
  void (*normalize_rows)(double* data, std::size_t columns, std::size_t rows, std::size_t stride);

  /// out[i] = min over forms f of (constants[f] + sum_c coefficients[f*columns + c] * row_i[c]),
  /// forms taken in order, columns in order, zero coefficients skipped.
  void (*min_affine_forms)(const double* data, std::size_t columns, std::size_t rows, std::size_t stride,
                           const double* coefficients, const double* constants, std::size_t forms,
                           double* out);

  /// out[i] = exp(-s * (x[i] - shift)).
  void (*exp_neg_scaled)(const double* x, std::size_t n, double s, double shift, double* out);

  /// sum over x[i] <= limit of exp(-s * x[i]).
  double (*exp_neg_sum_below)(const double* x, std::size_t n, double s, double limit);
};

const KernelTable& scalar_kernels() noexcept;
/// Null when not compiled in or when the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels() noexcept;
/// Null when not compiled in (non-aarch64 builds).
const KernelTable* neon_kernels() noexcept;

/// Best table for this machine, decided once. COVERMEASURE_SIMD=scalar
/// forces the scalar reference.
const KernelTable& active_kernels() noexcept;

/// The exp used by the kernels, exposed for testing. Arguments below -708
/// give 0 and above 709 give +inf; in between the result is within 2 ulp.
double kernel_exp(double y) noexcept;

}  // namespace covermeasure::simd
