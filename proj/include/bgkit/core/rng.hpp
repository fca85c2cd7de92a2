#pragma once

#include <cstdint>
#include <random>

namespace bgkit::core {

// splitmix64 finalizer; combines seeds and keys into child-stream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Deterministic RNG. mt19937_64 is fully specified by the standard; the
// distribution algorithms here are fixed as well (std:: distributions are
// implementation-defined), so a seed produces the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Gaussian via Box-Muller; consumes exactly two draws per call.
  double normal(double mean = 0.0, double stddev = 1.0);

  /// Independent child stream derived from this stream's seed key.
  static Rng child(std::uint64_t seed, std::uint64_t key) { return Rng(mix_seed(seed, key)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bgkit::core
