#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dewsp {

// Deterministic random source. All draws are derived from mt19937_64 with
// explicit algorithms (no std::*_distribution), so a given seed replays
// identically on any platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (consumes two uniforms per draw).
  double next_normal();

  // Uniform index in [0, n), unbiased via rejection.
  size_t next_index(size_t n);

  // Uniformly random k-subset of {0..n-1}, in draw order.
  std::vector<int> sample_without_replacement(int k, int n);

 private:
  std::mt19937_64 engine_;
};

// Combines a base seed with a stream index into an independent seed
// (splitmix64 finalizer over the pair).
uint64_t mix_seed(uint64_t seed, uint64_t stream);

}  // namespace dewsp
