#include "stokes/kernels.hpp"

#include <atomic>
#include <cassert>

namespace stokes::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(STOKES_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(STOKES_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() noexcept {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

namespace {

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detect_isa()};
  return slot;
}

}  // namespace

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) noexcept {
  const Isa chosen = isa_available(isa) ? isa : Isa::Scalar;
  active_slot().store(chosen, std::memory_order_relaxed);
  return chosen;
}

const Table& table(Isa isa) {
  if (!isa_available(isa)) return detail::scalar_table();
  switch (isa) {
#if defined(STOKES_HAVE_AVX2_KERNELS)
    case Isa::Avx2: return detail::avx2_table();
#endif
#if defined(STOKES_HAVE_NEON_KERNELS)
    case Isa::Neon: return detail::neon_table();
#endif
    default: return detail::scalar_table();
  }
}

void projection_sq_row(const RowInputs& in, std::span<double> out) {
  assert(in.f0.size() >= out.size() && in.f1.size() >= out.size() && in.f2.size() >= out.size());
  table(active_isa())
      .projection_sq_row(in.f0.data(), in.f1.data(), in.f2.data(), in.s0, in.s1, in.s2, out.data(),
                         out.size());
}

void norm_sq_row(const RowInputs& in, std::span<double> out) {
  assert(in.f0.size() >= out.size() && in.f1.size() >= out.size() && in.f2.size() >= out.size());
  table(active_isa())
      .norm_sq_row(in.f0.data(), in.f1.data(), in.f2.data(), in.s0, in.s1, in.s2, out.data(),
                   out.size());
}

double weighted_dot(std::span<const double> w, std::span<const double> f,
                    std::span<const double> g) {
  assert(f.size() == w.size() && g.size() == w.size());
  return table(active_isa()).weighted_dot(w.data(), f.data(), g.data(), w.size());
}

RowArgmax row_argmax(std::span<const double> v) {
  assert(!v.empty());
  const double best = table(active_isa()).row_max(v.data(), v.size());
  std::size_t index = 0;
  while (index + 1 < v.size() && !(v[index] == best)) ++index;
  return {best, index};
}

}  // namespace stokes::kernels
