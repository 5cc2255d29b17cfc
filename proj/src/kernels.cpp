#include "besov/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "besov/coef_field.hpp"
#include "besov/errors.hpp"
#include "besov/prox.hpp"

namespace besov::kernels {

namespace {

constexpr std::size_t kChunk = 4096;

inline double absPow(double x, double p) {
  const double a = std::fabs(x);
  if (p == 2.0) return a * a;
  if (p == 1.0) return a;
  return std::pow(a, p);
}

inline double signedPow(double x, double e) {
  if (x == 0.0) return 0.0;
  const double m = e == 1.0 ? std::fabs(x) : std::pow(std::fabs(x), e);
  return x > 0.0 ? m : -m;
}

void checkLayout(std::size_t flatSize, std::size_t levels) {
  if (levels == 0 || flatSize != CoefField::flatSize(static_cast<int>(levels) - 1)) {
    throw ValidationError("kernel: flat size does not match the per-level array length");
  }
}

void checkOutput(std::size_t inSize, std::size_t outSize) {
  if (inSize != outSize) {
    throw ValidationError("kernel: output size does not match the input size");
  }
}

struct Chunk {
  int level;
  std::size_t begin;
  std::size_t end;
};

// Fixed decomposition: every chunk lies inside a single level.
std::vector<Chunk> chunksOf(int maxLevel) {
  std::vector<Chunk> chunks;
  for (int j = 0; j <= maxLevel; ++j) {
    const std::size_t begin = CoefField::levelOffset(j);
    const std::size_t end = begin + CoefField::levelSize(j);
    for (std::size_t b = begin; b < end; b += kChunk) {
      chunks.push_back({j, b, std::min(end, b + kChunk)});
    }
  }
  return chunks;
}

}  // namespace

namespace serial {

std::vector<double> levelPowerSums(std::span<const double> flat, int maxLevel, double p) {
  checkLayout(flat.size(), static_cast<std::size_t>(maxLevel) + 1);
  std::vector<double> sums(static_cast<std::size_t>(maxLevel) + 1, 0.0);
  for (int j = 0; j <= maxLevel; ++j) {
    const std::size_t begin = CoefField::levelOffset(j);
    const std::size_t end = begin + CoefField::levelSize(j);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += absPow(flat[i], p);
    sums[static_cast<std::size_t>(j)] = s;
  }
  return sums;
}

void scaleByLevel(std::span<const double> in, std::span<const double> levelFactors,
                  std::span<double> out) {
  checkLayout(in.size(), levelFactors.size());
  checkOutput(in.size(), out.size());
  for (std::size_t j = 0; j < levelFactors.size(); ++j) {
    const std::size_t begin = CoefField::levelOffset(static_cast<int>(j));
    const std::size_t end = begin + CoefField::levelSize(static_cast<int>(j));
    for (std::size_t i = begin; i < end; ++i) out[i] = levelFactors[j] * in[i];
  }
}

void proxByLevel(std::span<const double> data, std::span<const double> multipliers,
                 std::span<const double> weights, double alpha, double q, std::span<double> out) {
  checkLayout(data.size(), multipliers.size());
  checkLayout(data.size(), weights.size());
  checkOutput(data.size(), out.size());
  for (std::size_t j = 0; j < multipliers.size(); ++j) {
    const std::size_t begin = CoefField::levelOffset(static_cast<int>(j));
    const std::size_t end = begin + CoefField::levelSize(static_cast<int>(j));
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = detail::scalarProxUnchecked(multipliers[j], data[i], alpha, weights[j], q);
    }
  }
}

void powerGradientByLevel(std::span<const double> in, std::span<const double> weights, double q,
                          std::span<double> out) {
  checkLayout(in.size(), weights.size());
  checkOutput(in.size(), out.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const std::size_t begin = CoefField::levelOffset(static_cast<int>(j));
    const std::size_t end = begin + CoefField::levelSize(static_cast<int>(j));
    for (std::size_t i = begin; i < end; ++i) out[i] = q * weights[j] * signedPow(in[i], q - 1.0);
  }
}

}  // namespace serial

namespace parallel {

std::vector<double> levelPowerSums(std::span<const double> flat, int maxLevel, double p) {
  checkLayout(flat.size(), static_cast<std::size_t>(maxLevel) + 1);
  const std::vector<Chunk> chunks = chunksOf(maxLevel);
  std::vector<double> partial(chunks.size(), 0.0);
  const auto count = static_cast<std::ptrdiff_t>(chunks.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    const Chunk& chunk = chunks[static_cast<std::size_t>(c)];
    double s = 0.0;
    for (std::size_t i = chunk.begin; i < chunk.end; ++i) s += absPow(flat[i], p);
    partial[static_cast<std::size_t>(c)] = s;
  }
  std::vector<double> sums(static_cast<std::size_t>(maxLevel) + 1, 0.0);
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    sums[static_cast<std::size_t>(chunks[c].level)] += partial[c];
  }
  return sums;
}

void scaleByLevel(std::span<const double> in, std::span<const double> levelFactors,
                  std::span<double> out) {
  checkLayout(in.size(), levelFactors.size());
  checkOutput(in.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = levelFactors[static_cast<std::size_t>(CoefField::levelOf(k))] * in[k];
  }
}

void proxByLevel(std::span<const double> data, std::span<const double> multipliers,
                 std::span<const double> weights, double alpha, double q, std::span<double> out) {
  checkLayout(data.size(), multipliers.size());
  checkLayout(data.size(), weights.size());
  checkOutput(data.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(data.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const auto j = static_cast<std::size_t>(CoefField::levelOf(k));
    out[k] = detail::scalarProxUnchecked(multipliers[j], data[k], alpha, weights[j], q);
  }
}

void powerGradientByLevel(std::span<const double> in, std::span<const double> weights, double q,
                          std::span<double> out) {
  checkLayout(in.size(), weights.size());
  checkOutput(in.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const auto j = static_cast<std::size_t>(CoefField::levelOf(k));
    out[k] = q * weights[j] * signedPow(in[k], q - 1.0);
  }
}

}  // namespace parallel

std::vector<double> levelPowerSums(std::span<const double> flat, int maxLevel, double p,
                                   Execution exec) {
  return exec == Execution::parallel ? parallel::levelPowerSums(flat, maxLevel, p)
                                     : serial::levelPowerSums(flat, maxLevel, p);
}

void scaleByLevel(std::span<const double> in, std::span<const double> levelFactors,
                  std::span<double> out, Execution exec) {
  if (exec == Execution::parallel) {
    parallel::scaleByLevel(in, levelFactors, out);
  } else {
    serial::scaleByLevel(in, levelFactors, out);
  }
}

void proxByLevel(std::span<const double> data, std::span<const double> multipliers,
                 std::span<const double> weights, double alpha, double q, std::span<double> out,
                 Execution exec) {
  validateScalarProxArguments(1.0, 0.0, alpha, 1.0, q);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    validateScalarProxArguments(j < multipliers.size() ? multipliers[j] : 0.0, 0.0, alpha,
                                weights[j], q);
  }
  if (!std::all_of(data.begin(), data.end(), [](double v) { return std::isfinite(v); })) {
    throw ValidationError("prox data contains non-finite values");
  }
  if (exec == Execution::parallel) {
    parallel::proxByLevel(data, multipliers, weights, alpha, q, out);
  } else {
    serial::proxByLevel(data, multipliers, weights, alpha, q, out);
  }
}

void powerGradientByLevel(std::span<const double> in, std::span<const double> weights, double q,
                          std::span<double> out, Execution exec) {
  if (exec == Execution::parallel) {
    parallel::powerGradientByLevel(in, weights, q, out);
  } else {
    serial::powerGradientByLevel(in, weights, q, out);
  }
}

}  // namespace besov::kernels
