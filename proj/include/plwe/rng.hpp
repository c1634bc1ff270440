#pragma once

#include <cstdint>
#include <random>

namespace plwe {

// Decorrelates per-purpose substreams of a master seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Seeded generator wrapper.  Determinism is per-binary: the stream for a given
// seed is stable across runs of the same build on the same platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, n); n >= 1.  Rejection keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n);

  double gauss() { return norm_(gen_); }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> norm_{0.0, 1.0};
};

}  // namespace plwe
