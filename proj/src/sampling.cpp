#include "stokes/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stokes {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_id(std::string_view name) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream))) {}

double Sampler::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Direction Sampler::direction() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Direction::normalized(r * std::cos(phi), r * std::sin(phi), z);
}

Point3 Sampler::interior_point(double margin) {
  const double lo = margin, hi = std::numbers::pi - margin;
  const double x = uniform(lo, hi);
  const double y = uniform(lo, hi);
  const double z = uniform(lo, hi);
  return {x, y, z};
}

}  // namespace stokes
