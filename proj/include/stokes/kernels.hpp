#pragma once

// Data-parallel inner loops shared by the grid oracles and the tensor
// quadrature. Each kernel has a scalar reference implementation and, where the
// target supports it, an AVX2 (x86-64) or NEON (aarch64) variant selected at
// runtime. Row kernels use only multiplies and adds in a fixed order, so all
// variants produce bit-identical rows; reductions (weighted_dot) may differ in
// the last bits because lanes are summed in a different order.

#include <cstddef>
#include <span>
#include <string_view>

namespace stokes::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

/// True when the variant is compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available variant on this machine.
Isa detect_isa() noexcept;

/// Variant used by the span-level entry points below. Defaults to detect_isa().
Isa active_isa() noexcept;

/// Selects the variant for subsequent calls; falls back to Scalar when the
/// request is unavailable. Returns the variant actually selected.
Isa set_active_isa(Isa isa) noexcept;

struct Table {
  /// out[k] = (s0*f0[k] + s1*f1[k] + s2*f2[k])^2
  void (*projection_sq_row)(const double* f0, const double* f1, const double* f2, double s0,
                            double s1, double s2, double* out, std::size_t n);
  /// out[k] = (s0*f0[k])^2 + (s1*f1[k])^2 + (s2*f2[k])^2
  void (*norm_sq_row)(const double* f0, const double* f1, const double* f2, double s0, double s1,
                      double s2, double* out, std::size_t n);
  /// sum_k w[k]*f[k]*g[k]
  double (*weighted_dot)(const double* w, const double* f, const double* g, std::size_t n);
  /// max_k v[k]; n >= 1
  double (*row_max)(const double* v, std::size_t n);
};

/// Kernel table for one variant; Scalar is always available.
const Table& table(Isa isa);

namespace detail {
const Table& scalar_table() noexcept;
#if defined(STOKES_HAVE_AVX2_KERNELS)
const Table& avx2_table() noexcept;
#endif
#if defined(STOKES_HAVE_NEON_KERNELS)
const Table& neon_table() noexcept;
#endif
}  // namespace detail

struct RowInputs {
  std::span<const double> f0, f1, f2;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
};

void projection_sq_row(const RowInputs& in, std::span<double> out);
void norm_sq_row(const RowInputs& in, std::span<double> out);
double weighted_dot(std::span<const double> w, std::span<const double> f,
                    std::span<const double> g);

struct RowArgmax {
  double value = 0.0;
  std::size_t index = 0;
};

/// Maximum of v and the smallest index attaining it.
RowArgmax row_argmax(std::span<const double> v);

}  // namespace stokes::kernels
