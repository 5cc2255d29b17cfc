#include "besov/solver.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "besov/errors.hpp"
#include "besov/prox.hpp"

namespace besov {

void validate(const PenaltySpec& pen) {
  validate(pen.space);
  if (pen.space.d != 1) {
    throw ValidationError("penalty space must be one-dimensional for coefficient fields");
  }
  if (pen.space.p < 1.0) {
    throw ValidationError("penalty space requires p >= 1");
  }
  if (!(pen.alpha > 0.0) || !std::isfinite(pen.alpha)) {
    throw ValidationError("regularization weight alpha must be positive and finite");
  }
  if (!(pen.power >= 1.0 && pen.power <= 2.0)) {
    throw ValidationError("penalty power q must lie in [1, 2]");
  }
}

PenaltySpec penaltyFromPlan(const RegularizationPlan& plan, double alpha) {
  PenaltySpec pen{plan.penaltySpace, plan.penaltyPower, alpha};
  validate(pen);
  return pen;
}

double penaltyLevelWeight(const PenaltySpec& pen, int level) {
  const double w = std::exp2(pen.power * weightExponent(pen.space) * level);
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw NumericalError("penalty weight at level " + std::to_string(level) +
                         " is outside the double range");
  }
  return w;
}

std::vector<double> penaltyLevelWeights(const PenaltySpec& pen, int maxLevel) {
  std::vector<double> weights(static_cast<std::size_t>(maxLevel) + 1);
  for (int j = 0; j <= maxLevel; ++j) weights[static_cast<std::size_t>(j)] = penaltyLevelWeight(pen, j);
  return weights;
}

double penaltyValue(const CoefField& u, const PenaltySpec& pen, Execution exec) {
  validate(pen);
  const std::vector<double> sums = kernels::levelPowerSums(u.values(), u.maxLevel(), pen.power, exec);
  double total = 0.0;
  for (std::size_t j = 0; j < sums.size(); ++j) {
    if (sums[j] != 0.0) total += penaltyLevelWeight(pen, static_cast<int>(j)) * sums[j];
  }
  return total;
}

namespace {

double squaredNorm(const CoefField& r, Execution exec) {
  double total = 0.0;
  for (double s : kernels::levelPowerSums(r.values(), r.maxLevel(), 2.0, exec)) total += s;
  return total;
}

double maxAbs(std::span<const double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  return m;
}

}  // namespace

double tikhonovObjective(const LinearOperator& op, const CoefField& data, const CoefField& u,
                         const PenaltySpec& pen, Execution exec) {
  const CoefField misfit = op.apply(u) - data;
  return squaredNorm(misfit, exec) + pen.alpha * penaltyValue(u, pen, exec);
}

SolveReport solveDiagonal(const DiagonalScaleOperator& op, const CoefField& data,
                          const PenaltySpec& pen, Execution exec) {
  validate(pen);
  const int J = data.maxLevel();
  if (J > op.maxLevel()) {
    throw ValidationError("data level " + std::to_string(J) + " exceeds operator maxLevel " +
                          std::to_string(op.maxLevel()));
  }
  const std::vector<double> multipliers(op.multipliers().begin(),
                                        op.multipliers().begin() + J + 1);
  const std::vector<double> weights = penaltyLevelWeights(pen, J);

  SolveReport report;
  report.minimizer = CoefField(J);
  kernels::proxByLevel(data.values(), multipliers, weights, pen.alpha, pen.power,
                       report.minimizer.values(), exec);

  double residual = 0.0;
  const auto u = report.minimizer.values();
  const auto y = data.values();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto j = static_cast<std::size_t>(CoefField::levelOf(i));
    residual = std::max(residual, scalarStationarityResidual(multipliers[j], y[i], pen.alpha,
                                                             weights[j], pen.power, u[i]));
  }
  report.residual = residual;
  report.objective = tikhonovObjective(op, data, report.minimizer, pen, exec);
  report.iterations = 0;
  return report;
}

SolveReport solveGeneral(const LinearOperator& op, const CoefField& data, const PenaltySpec& pen,
                         const GeneralSolveOptions& options) {
  validate(pen);
  if (!(pen.power > 1.0)) {
    throw ValidationError("solveGeneral requires penalty power q > 1");
  }
  if (options.maxIterations < 1 || !(options.tolerance > 0.0)) {
    throw ValidationError("solveGeneral needs maxIterations >= 1 and tolerance > 0");
  }
  const int J = op.maxLevel();
  if (data.maxLevel() > J) {
    throw ValidationError("data level " + std::to_string(data.maxLevel()) +
                          " exceeds operator maxLevel " + std::to_string(J));
  }
  const double L = op.normBound();
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw ValidationError("operator norm bound must be positive and finite");
  }
  const CoefField y = data.padded(J);
  const double invL2 = 1.0 / (L * L);
  const std::vector<double> ones(static_cast<std::size_t>(J) + 1, 1.0);
  const std::vector<double> weights = penaltyLevelWeights(pen, J);
  const Execution exec = options.exec;

  SolveReport report;
  CoefField u(J);
  CoefField residualField = op.apply(u) - y;
  double objective = squaredNorm(residualField, exec) + pen.alpha * penaltyValue(u, pen, exec);
  if (options.recordHistory) report.objectiveHistory.push_back(objective);

  CoefField next(J);
  report.converged = false;
  for (int iter = 1; iter <= options.maxIterations; ++iter) {
    CoefField step = u - invL2 * op.applyAdjoint(residualField);
    kernels::proxByLevel(step.values(), ones, weights, pen.alpha * invL2, pen.power,
                         next.values(), exec);
    CoefField nextResidual = op.apply(next) - y;
    const double nextObjective =
        squaredNorm(nextResidual, exec) + pen.alpha * penaltyValue(next, pen, exec);
    const double change = maxAbs((next - u).values());
    const double scale = std::max(maxAbs(next.values()), DBL_MIN);

    report.iterations = iter;
    report.residual = change / scale;
    if (options.recordHistory) report.objectiveHistory.push_back(nextObjective);
    const bool flat = objective - nextObjective <= options.tolerance * std::max(1.0, nextObjective);
    std::swap(u, next);
    residualField = std::move(nextResidual);
    objective = nextObjective;
    if (flat && (change == 0.0 || report.residual <= options.tolerance)) {
      report.converged = true;
      break;
    }
  }
  report.minimizer = std::move(u);
  report.objective = objective;
  return report;
}

CoefField penaltyGradient(const CoefField& u, const PenaltySpec& pen, Execution exec) {
  validate(pen);
  if (!(pen.power > 1.0)) {
    throw ValidationError("penaltyGradient requires q > 1 (the q = 1 subdifferential is set-valued)");
  }
  CoefField grad(u.maxLevel());
  const std::vector<double> weights = penaltyLevelWeights(pen, u.maxLevel());
  kernels::powerGradientByLevel(u.values(), weights, pen.power, grad.values(), exec);
  return grad;
}

SourceConditionReport checkSourceCondition(const CoefField& uTrue, const PenaltySpec& pen,
                                           const BesovSpace& adjointRange, Execution exec) {
  const CoefField grad = penaltyGradient(uTrue, pen, exec);
  SourceConditionReport report;
  report.levelContributions = levelContributions(grad, adjointRange, exec);
  double total = 0.0;
  for (double c : report.levelContributions) total += c;
  report.gradientNormInBG = total == 0.0 ? 0.0 : std::pow(total, 1.0 / adjointRange.p);
  report.decay = analyzeDecay(report.levelContributions);
  report.satisfied = std::isfinite(report.gradientNormInBG) && report.decay.decaying;
  return report;
}

double scalarBregmanGap(double a, double b, double p) {
  const double absA = std::fabs(a);
  const double signA = a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0);
  return std::pow(std::fabs(b), p) - std::pow(absA, p) -
         p * signA * std::pow(absA, p - 1.0) * (b - a);
}

double bregmanDistance(const CoefField& u, const CoefField& uTrue, const PenaltySpec& pen) {
  validate(pen);
  if (!(pen.power > 1.0)) {
    throw ValidationError("bregmanDistance requires q > 1");
  }
  const int J = std::max(u.maxLevel(), uTrue.maxLevel());
  const CoefField b = u.padded(J);
  const CoefField a = uTrue.padded(J);
  double total = 0.0;
  for (int j = 0; j <= J; ++j) {
    const double w = penaltyLevelWeight(pen, j);
    const auto as = a.level(j);
    const auto bs = b.level(j);
    double levelSum = 0.0;
    for (std::size_t k = 0; k < as.size(); ++k) {
      // each term is nonnegative by convexity; clamp rounding below zero
      levelSum += std::max(0.0, scalarBregmanGap(as[k], bs[k], pen.power));
    }
    total += w * levelSum;
  }
  return total;
}

}  // namespace besov
