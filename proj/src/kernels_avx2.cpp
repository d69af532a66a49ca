// Compiled with -mavx2 only (no -mfma): products and sums round exactly like the
// scalar reference.
#include <immintrin.h>

#include "stokes/kernels.hpp"

namespace stokes::kernels {
namespace {

void projection_sq_row(const double* f0, const double* f1, const double* f2, double s0, double s1,
                       double s2, double* out, std::size_t n) {
  const __m256d v0 = _mm256_set1_pd(s0);
  const __m256d v1 = _mm256_set1_pd(s1);
  const __m256d v2 = _mm256_set1_pd(s2);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a = _mm256_mul_pd(v0, _mm256_loadu_pd(f0 + k));
    const __m256d b = _mm256_mul_pd(v1, _mm256_loadu_pd(f1 + k));
    const __m256d c = _mm256_mul_pd(v2, _mm256_loadu_pd(f2 + k));
    const __m256d t = _mm256_add_pd(_mm256_add_pd(a, b), c);
    _mm256_storeu_pd(out + k, _mm256_mul_pd(t, t));
  }
  for (; k < n; ++k) {
    const double t = (s0 * f0[k] + s1 * f1[k]) + s2 * f2[k];
    out[k] = t * t;
  }
}

void norm_sq_row(const double* f0, const double* f1, const double* f2, double s0, double s1,
                 double s2, double* out, std::size_t n) {
  const __m256d v0 = _mm256_set1_pd(s0);
  const __m256d v1 = _mm256_set1_pd(s1);
  const __m256d v2 = _mm256_set1_pd(s2);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a = _mm256_mul_pd(v0, _mm256_loadu_pd(f0 + k));
    const __m256d b = _mm256_mul_pd(v1, _mm256_loadu_pd(f1 + k));
    const __m256d c = _mm256_mul_pd(v2, _mm256_loadu_pd(f2 + k));
    const __m256d ab = _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    _mm256_storeu_pd(out + k, _mm256_add_pd(ab, _mm256_mul_pd(c, c)));
  }
  for (; k < n; ++k) {
    const double a = s0 * f0[k];
    const double b = s1 * f1[k];
    const double c = s2 * f2[k];
    out[k] = (a * a + b * b) + c * c;
  }
}

double weighted_dot(const double* w, const double* f, const double* g, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d wf = _mm256_mul_pd(_mm256_loadu_pd(w + k), _mm256_loadu_pd(f + k));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(wf, _mm256_loadu_pd(g + k)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < n; ++k) sum += (w[k] * f[k]) * g[k];
  return sum;
}

double row_max(const double* v, std::size_t n) {
  std::size_t k = 0;
  double best = v[0];
  if (n >= 4) {
    __m256d acc = _mm256_loadu_pd(v);
    for (k = 4; k + 4 <= n; k += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(v + k));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (double lane : lanes) best = lane > best ? lane : best;
  }
  for (; k < n; ++k) best = v[k] > best ? v[k] : best;
  return best;
}

constexpr Table kAvx2{projection_sq_row, norm_sq_row, weighted_dot, row_max};

}  // namespace

const Table& detail::avx2_table() noexcept { return kAvx2; }

}  // namespace stokes::kernels
