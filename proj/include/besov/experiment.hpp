#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "besov/kernels.hpp"
#include "besov/planner.hpp"

namespace besov {

struct PlanChoice {
  PlanRule rule = PlanRule::optimal;
  double weakenedP = 0.0;  ///< used only with PlanRule::weakened
};

/// Which plan a choice selects for the signature.
RegularizationPlan resolvePlan(const ProblemSignature& sig, const PlanChoice& choice);

/// delta-grid experiment with the parameter rule alpha = alphaConstant * delta.
struct ExperimentConfig {
  ProblemSignature signature;
  PlanChoice plan;
  double eta = 1.0;
  int maxLevel = 12;
  std::vector<double> deltaGrid{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  double alphaConstant = 1.0;
  std::uint64_t seed = 42;
  double margin = 0.1;
};

void validate(const ExperimentConfig& config);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rSquared = 0.0;
};

struct RatePoint {
  double delta = 0.0;
  double error = 0.0;
};

/// Ordinary least squares of log(error) on log(delta); needs >= 3 positive points.
LogLogFit fitLogLogSlope(std::span<const RatePoint> points);

struct RateRow {
  double delta = 0.0;
  double alpha = 0.0;
  double errorHSigma = 0.0;  ///< ||u_alpha,delta - u+||_{H^sigma}
  double errorBR = 0.0;      ///< ||u_alpha,delta - u+||_{B_R}
};

struct RateReport {
  std::vector<RateRow> rows;
  LogLogFit fit;
  double sigma = 0.0;
  RegularizationPlan plan;
  int errorBRInversions = 0;  ///< grid steps where errorBR increases as delta decreases
};

/**
 * Builds u+ = makeSource(B_S), v = F u+ for the diagonal operator of order eta, and
 * for each delta solves the Tikhonov problem on v^delta exactly, recording the H^sigma
 * and B_R errors. Grid points run in parallel under Execution::parallel; each point
 * draws its noise from deriveSeed(seed, index), so serial and parallel runs agree
 * bit-for-bit.
 */
RateReport runRateExperiment(const ExperimentConfig& config,
                             Execution exec = Execution::parallel);

/// Number of i with values[i+1] > values[i].
int countIncreases(std::span<const double> values);

}  // namespace besov
