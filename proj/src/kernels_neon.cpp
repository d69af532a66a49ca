// aarch64 only. Uses separate vmulq/vaddq (no vfmaq) to match the scalar rounding.
#include <arm_neon.h>

#include "stokes/kernels.hpp"

namespace stokes::kernels {
namespace {

void projection_sq_row(const double* f0, const double* f1, const double* f2, double s0, double s1,
                       double s2, double* out, std::size_t n) {
  const float64x2_t v0 = vdupq_n_f64(s0);
  const float64x2_t v1 = vdupq_n_f64(s1);
  const float64x2_t v2 = vdupq_n_f64(s2);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t a = vmulq_f64(v0, vld1q_f64(f0 + k));
    const float64x2_t b = vmulq_f64(v1, vld1q_f64(f1 + k));
    const float64x2_t c = vmulq_f64(v2, vld1q_f64(f2 + k));
    const float64x2_t t = vaddq_f64(vaddq_f64(a, b), c);
    vst1q_f64(out + k, vmulq_f64(t, t));
  }
  for (; k < n; ++k) {
    const double t = (s0 * f0[k] + s1 * f1[k]) + s2 * f2[k];
    out[k] = t * t;
  }
}

void norm_sq_row(const double* f0, const double* f1, const double* f2, double s0, double s1,
                 double s2, double* out, std::size_t n) {
  const float64x2_t v0 = vdupq_n_f64(s0);
  const float64x2_t v1 = vdupq_n_f64(s1);
  const float64x2_t v2 = vdupq_n_f64(s2);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t a = vmulq_f64(v0, vld1q_f64(f0 + k));
    const float64x2_t b = vmulq_f64(v1, vld1q_f64(f1 + k));
    const float64x2_t c = vmulq_f64(v2, vld1q_f64(f2 + k));
    const float64x2_t ab = vaddq_f64(vmulq_f64(a, a), vmulq_f64(b, b));
    vst1q_f64(out + k, vaddq_f64(ab, vmulq_f64(c, c)));
  }
  for (; k < n; ++k) {
    const double a = s0 * f0[k];
    const double b = s1 * f1[k];
    const double c = s2 * f2[k];
    out[k] = (a * a + b * b) + c * c;
  }
}

double weighted_dot(const double* w, const double* f, const double* g, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t wf = vmulq_f64(vld1q_f64(w + k), vld1q_f64(f + k));
    acc = vaddq_f64(acc, vmulq_f64(wf, vld1q_f64(g + k)));
  }
  double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; k < n; ++k) sum += (w[k] * f[k]) * g[k];
  return sum;
}

double row_max(const double* v, std::size_t n) {
  std::size_t k = 0;
  double best = v[0];
  if (n >= 2) {
    float64x2_t acc = vld1q_f64(v);
    for (k = 2; k + 2 <= n; k += 2) acc = vmaxq_f64(acc, vld1q_f64(v + k));
    const double hi = vmaxvq_f64(acc);
    best = hi > best ? hi : best;
  }
  for (; k < n; ++k) best = v[k] > best ? v[k] : best;
  return best;
}

constexpr Table kNeon{projection_sq_row, norm_sq_row, weighted_dot, row_max};

}  // namespace

const Table& detail::neon_table() noexcept { return kNeon; }

}  // namespace stokes::kernels
