#include "stokes/kernels.hpp"

namespace stokes::kernels {
namespace {

void projection_sq_row(const double* f0, const double* f1, const double* f2, double s0, double s1,
                       double s2, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double t = (s0 * f0[k] + s1 * f1[k]) + s2 * f2[k];
    out[k] = t * t;
  }
}

void norm_sq_row(const double* f0, const double* f1, const double* f2, double s0, double s1,
                 double s2, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double a = s0 * f0[k];
    const double b = s1 * f1[k];
    const double c = s2 * f2[k];
    out[k] = (a * a + b * b) + c * c;
  }
}

double weighted_dot(const double* w, const double* f, const double* g, std::size_t n) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += (w[k] * f[k]) * g[k];
  return sum;
}

double row_max(const double* v, std::size_t n) {
  double best = v[0];
  for (std::size_t k = 1; k < n; ++k) best = v[k] > best ? v[k] : best;
  return best;
}

constexpr Table kScalar{projection_sq_row, norm_sq_row, weighted_dot, row_max};

}  // namespace

const Table& detail::scalar_table() noexcept { return kScalar; }

}  // namespace stokes::kernels
