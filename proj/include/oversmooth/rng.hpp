#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace oversmooth {

/// splitmix64 finalizer, used to derive independent sub-streams from one
/// user-facing seed (per layer, per trial, per attempt).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic draw helpers over std::mt19937_64. The engine itself is
/// fully specified by the standard; the standard *distributions* are not,
/// so every generator and kernel factory draws through these instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [-1, 1).
  double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

  /// Standard normal via Box-Muller (one value per call, no cache).
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    // 1 - u1 lies in (0, 1], keeping the log finite.
    return std::sqrt(-2.0 * std::log(1.0 - u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Uniform integer in [0, bound) by rejection, bias-free.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % bound;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oversmooth
