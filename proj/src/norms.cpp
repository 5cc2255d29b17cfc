#include "besov/norms.hpp"

#include <cmath>

#include "besov/errors.hpp"

namespace besov {

namespace {

void checkFieldSpace(const BesovSpace& space) {
  validate(space);
  if (space.d != 1) {
    throw ValidationError("coefficient fields are one-dimensional; space has d = " +
                          std::to_string(space.d));
  }
}

}  // namespace

std::vector<double> levelContributions(const CoefField& u, const BesovSpace& space,
                                       Execution exec) {
  checkFieldSpace(space);
  std::vector<double> sums = kernels::levelPowerSums(u.values(), u.maxLevel(), space.p, exec);
  for (std::size_t j = 0; j < sums.size(); ++j) {
    if (sums[j] != 0.0) {
      sums[j] *= levelWeight(space, static_cast<int>(j));
    }
  }
  return sums;
}

double besovNorm(const CoefField& u, const BesovSpace& space, Execution exec) {
  double total = 0.0;
  for (double c : levelContributions(u, space, exec)) total += c;
  if (total == 0.0) {
    return 0.0;
  }
  return space.p == 2.0 ? std::sqrt(total) : std::pow(total, 1.0 / space.p);
}

double sobolevNorm(const CoefField& u, double sigma, Execution exec) {
  return besovNorm(u, sobolevSpace(sigma), exec);
}

DecayReport analyzeDecay(std::span<const double> contributions) {
  DecayReport report;
  double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t j = 0; j < contributions.size(); ++j) {
    const double c = contributions[j];
    if (!std::isfinite(c)) {
      report.finite = false;
      continue;
    }
    if (c <= 0.0) continue;
    const double x = static_cast<double>(j);
    const double y = std::log2(c);
    n += 1.0;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  if (n >= 2.0) {
    report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  report.rate = std::exp2(report.slope);
  report.decaying = report.finite && (n < 2.0 || report.slope < 0.0);
  return report;
}

}  // namespace besov
