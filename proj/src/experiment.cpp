#include "besov/experiment.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "besov/errors.hpp"
#include "besov/norms.hpp"
#include "besov/operators.hpp"
#include "besov/solver.hpp"
#include "besov/synthesis.hpp"

namespace besov {

RegularizationPlan resolvePlan(const ProblemSignature& sig, const PlanChoice& choice) {
  switch (choice.rule) {
    case PlanRule::direct:
      return planDirect(sig);
    case PlanRule::weakened:
      return planWeakened(sig, choice.weakenedP);
    case PlanRule::optimal:
      return planOptimal(sig);
  }
  throw ValidationError("unknown plan rule");
}

void validate(const ExperimentConfig& config) {
  if (config.signature.dimension() != 1) {
    throw ValidationError("rate experiments run on one-dimensional fields (d = 1)");
  }
  if (config.deltaGrid.size() < 3) {
    throw ValidationError("delta grid needs at least 3 values");
  }
  for (std::size_t i = 0; i < config.deltaGrid.size(); ++i) {
    const double delta = config.deltaGrid[i];
    if (!(delta > 0.0) || !std::isfinite(delta)) {
      throw ValidationError("delta grid entry " + std::to_string(i) + " is not positive");
    }
    if (i > 0 && !(delta < config.deltaGrid[i - 1])) {
      throw ValidationError("delta grid must be strictly decreasing (entry " + std::to_string(i) +
                            ")");
    }
  }
  if (!(config.alphaConstant > 0.0) || !std::isfinite(config.alphaConstant)) {
    throw ValidationError("alpha constant must be positive");
  }
  if (!(config.eta >= 0.0) || !std::isfinite(config.eta)) {
    throw ValidationError("eta must be finite and >= 0");
  }
  if (!(config.margin > 0.0)) {
    throw ValidationError("source margin must be positive");
  }
  if (config.maxLevel < 0 || config.maxLevel > CoefField::kMaxSupportedLevel) {
    throw ValidationError("maxLevel out of range");
  }
}

LogLogFit fitLogLogSlope(std::span<const RatePoint> points) {
  if (points.size() < 3) {
    throw ValidationError("log-log fit needs at least 3 points");
  }
  double n = 0.0, sx = 0.0, sy = 0.0;
  for (const RatePoint& pt : points) {
    if (!(pt.delta > 0.0) || !(pt.error > 0.0) || !std::isfinite(pt.delta) ||
        !std::isfinite(pt.error)) {
      throw ValidationError("log-log fit requires positive finite delta and error");
    }
    n += 1.0;
    sx += std::log(pt.delta);
    sy += std::log(pt.error);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const RatePoint& pt : points) {
    const double dx = std::log(pt.delta) - mx;
    const double dy = std::log(pt.error) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw ValidationError("log-log fit needs at least two distinct delta values");
  }
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double ssRes = syy - fit.slope * sxy;
  fit.rSquared = syy == 0.0 ? 1.0 : 1.0 - std::max(0.0, ssRes) / syy;
  return fit;
}

int countIncreases(std::span<const double> values) {
  int count = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) ++count;
  }
  return count;
}

RateReport runRateExperiment(const ExperimentConfig& config, Execution exec) {
  validate(config);
  RateReport report;
  report.plan = resolvePlan(config.signature, config.plan);
  report.sigma = report.plan.sigma;

  const int J = config.maxLevel;
  const CoefField truth = makeSource(config.signature.source, J, config.margin, config.seed);
  // Grid points are the parallel unit; kernels inside a point stay serial so
  // the result is independent of the execution policy.
  const DiagonalScaleOperator op(config.eta, J, Execution::serial);
  const CoefField clean = op.apply(truth);
  const BesovSpace penaltySpace = report.plan.penaltySpace;
  const BesovSpace rateSpace = sobolevSpace(report.sigma);
  penaltyLevelWeights(penaltyFromPlan(report.plan, 1.0), J);  // throws on weight overflow

  const auto count = static_cast<std::ptrdiff_t>(config.deltaGrid.size());
  report.rows.resize(config.deltaGrid.size());
  std::vector<std::exception_ptr> failures(config.deltaGrid.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      const double delta = config.deltaGrid[k];
      const NoisyData data = addNoise(clean, delta, deriveSeed(config.seed, k));
      const PenaltySpec pen = penaltyFromPlan(report.plan, config.alphaConstant * delta);
      const SolveReport solved = solveDiagonal(op, data.noisy, pen, Execution::serial);
      const CoefField error = solved.minimizer - truth;
      report.rows[k] = {delta, pen.alpha, besovNorm(error, rateSpace, Execution::serial),
                        besovNorm(error, penaltySpace, Execution::serial)};
    } catch (...) {
      failures[k] = std::current_exception();
    }
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<RatePoint> points;
  std::vector<double> errorsBR;
  for (const RateRow& row : report.rows) {
    points.push_back({row.delta, row.errorHSigma});
    errorsBR.push_back(row.errorBR);
  }
  try {
    report.fit = fitLogLogSlope(points);
  } catch (const ValidationError& e) {
    throw NumericalError(std::string("rate fit failed: ") + e.what());
  }
  report.errorBRInversions = countIncreases(errorsBR);
  return report;
}

}  // namespace besov
