#pragma once

// Reproducible sampling for the verification suites.
//
// Streams are std::mt19937_64 engines (the C++ standard fixes their output
// sequence) seeded with splitmix64(seed ^ splitmix64(stream)). Reals are built
// from the top 53 bits of each draw, so the sampled inputs are identical on
// every conforming platform; no std::*_distribution is involved.

#include <cstdint>
#include <random>
#include <string_view>

#include "stokes/eigenbasis.hpp"
#include "stokes/supnorms.hpp"

namespace stokes {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// FNV-1a of a stream name, for deriving named streams.
std::uint64_t stream_id(std::string_view name) noexcept;

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream);
  Sampler(std::uint64_t seed, std::string_view stream) : Sampler(seed, stream_id(stream)) {}

  /// Uniform in [0, 1).
  double unit();
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform on the sphere (Archimedes: z uniform in [-1,1], azimuth uniform).
  Direction direction();

  /// Uniform in [margin, pi - margin]^3.
  Point3 interior_point(double margin);

 private:
  std::mt19937_64 engine_;
};

}  // namespace stokes
