#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "vboe/types.h"

namespace vboe {

// Seeded random source. All draws are built from raw 64-bit words so that
// sampled values do not depend on the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  Bit bit() { return static_cast<Bit>(engine_() >> 63); }
  Angle angle() { return Angle(static_cast<int>(engine_() >> 61)); }
  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform on [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// Counter-based seed derivation: mixes the master seed with a path of
// indices (trial, round, stream, ...). Independent of execution order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

}  // namespace vboe
