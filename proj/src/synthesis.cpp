#include "besov/synthesis.hpp"

#include <cmath>
#include <numbers>

#include "besov/errors.hpp"

namespace besov {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (hasSpare_) {
    hasSpare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  hasSpare_ = true;
  return radius * std::cos(angle);
}

double Rng::sign() { return (engine_() >> 63) != 0 ? 1.0 : -1.0; }

std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined key
  std::uint64_t z = seed ^ (index * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CoefField makeSource(const BesovSpace& sourceSpace, int maxLevel, double margin,
                     std::uint64_t seed) {
  validate(sourceSpace);
  if (sourceSpace.p < 1.0) {
    throw ValidationError("makeSource requires p >= 1");
  }
  if (sourceSpace.d != 1) {
    throw ValidationError("makeSource generates one-dimensional fields (d = 1)");
  }
  if (!(margin > 0.0) || !std::isfinite(margin)) {
    throw ValidationError("makeSource requires a positive margin");
  }
  const double d = sourceSpace.d;
  const double decay = weightExponent(sourceSpace) + d / sourceSpace.p + margin;
  CoefField u(maxLevel);
  Rng rng(seed);
  for (int j = 0; j <= maxLevel; ++j) {
    const double envelope = std::exp2(-decay * j);
    for (double& value : u.level(j)) {
      const double r = rng.uniform(0.5, 1.0);
      value = rng.sign() * envelope * r;
    }
  }
  if (!u.allFinite()) {
    throw NumericalError("makeSource produced non-finite coefficients; reduce maxLevel");
  }
  return u;
}

NoisyData addNoise(const CoefField& clean, double delta, std::uint64_t seed) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw ValidationError("noise level delta must be finite and >= 0");
  }
  NoisyData data{clean, clean, delta, seed};
  if (delta == 0.0) {
    return data;
  }
  Rng rng(seed);
  std::vector<double> direction(clean.size());
  double norm2 = 0.0;
  for (double& n : direction) {
    n = rng.normal();
    norm2 += n * n;
  }
  const double scale = delta / std::sqrt(norm2);
  auto noisy = data.noisy.values();
  for (std::size_t i = 0; i < noisy.size(); ++i) noisy[i] += scale * direction[i];
  return data;
}

}  // namespace besov
