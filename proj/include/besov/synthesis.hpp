#pragma once

#include <cstdint>
#include <random>

#include "besov/besov_space.hpp"
#include "besov/coef_field.hpp"

namespace besov {

/**
 * Portable seeded generator: mt19937_64 with hand-rolled conversions, so a
 * (seed, draw sequence) pair reproduces bit-for-bit on every platform.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();
  /// +1 or -1 with equal probability.
  double sign();

 private:
  std::mt19937_64 engine_;
  bool hasSpare_ = false;
  double spare_ = 0.0;
};

/// Independent stream seed for grid point `index` of an experiment seeded with `seed`.
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index);

inline constexpr double kDefaultSourceMargin = 0.1;

/**
 * Deterministic field of prescribed Besov smoothness, u in B_S uniformly in J.
 *
 * |u_lambda| = 2^{-(s + (1/2 - 1/p)) j} 2^{-(1/p + margin) j} r_lambda with
 * r_lambda uniform in [1/2, 1] and a random sign, so the level-j contribution
 * to ||u||^p_{B_S} is of order 2^{-p margin j}. Coefficients are drawn in
 * flat order, so fields for different J share their common levels.
 */
CoefField makeSource(const BesovSpace& sourceSpace, int maxLevel, double margin,
                     std::uint64_t seed);

struct NoisyData {
  CoefField clean;
  CoefField noisy;
  double delta = 0.0;
  std::uint64_t seed = 0;
};

/// v^delta = v + delta * n / ||n||_{l2} for a Gaussian direction n over every index up to J.
NoisyData addNoise(const CoefField& clean, double delta, std::uint64_t seed);

}  // namespace besov
