#pragma once

#include <vector>

#include "besov/besov_space.hpp"
#include "besov/coef_field.hpp"
#include "besov/kernels.hpp"
#include "besov/norms.hpp"
#include "besov/operators.hpp"
#include "besov/planner.hpp"

namespace besov {

/**
 * Penalty alpha * sum_lambda w_{|lambda|} |u_lambda|^q with
 * w_j = 2^{q (s_R + d(1/2 - 1/p_R)) j}; for q = p_R this is alpha ||u||^{p_R}_{B_R}.
 *
 * 1 < q <= 2 is the range covered by the rate results. q = 1 (soft
 * thresholding) is accepted by the solvers only.
 */
struct PenaltySpec {
  BesovSpace space;
  double power = 2.0;
  double alpha = 1.0;
};

void validate(const PenaltySpec& pen);
PenaltySpec penaltyFromPlan(const RegularizationPlan& plan, double alpha);

double penaltyLevelWeight(const PenaltySpec& pen, int level);
std::vector<double> penaltyLevelWeights(const PenaltySpec& pen, int maxLevel);
/// sum_lambda w_{|lambda|} |u_lambda|^q (without alpha)
double penaltyValue(const CoefField& u, const PenaltySpec& pen,
                    Execution exec = Execution::parallel);
/// T_alpha(u) = ||F u - data||^2 + alpha * penaltyValue(u)
double tikhonovObjective(const LinearOperator& op, const CoefField& data, const CoefField& u,
                         const PenaltySpec& pen, Execution exec = Execution::parallel);

struct SolveReport {
  CoefField minimizer;
  double objective = 0.0;
  double residual = 0.0;  ///< max scaled stationarity residual (diagonal) or fixed-point residual
  int iterations = 0;     ///< 0 for the exact diagonal solver
  bool converged = true;
  std::vector<double> objectiveHistory;  ///< filled by solveGeneral when requested
};

/**
 * Exact minimizer of T_alpha for a diagonal operator. The problem decouples
 * into one scalarProx per coefficient: u_lambda = prox(mu_j, data_lambda, alpha, w_j, q).
 */
SolveReport solveDiagonal(const DiagonalScaleOperator& op, const CoefField& data,
                          const PenaltySpec& pen, Execution exec = Execution::parallel);

struct GeneralSolveOptions {
  int maxIterations = 100000;
  double tolerance = 1e-12;
  bool recordHistory = false;
  Execution exec = Execution::parallel;
};

/**
 * Proximal gradient for a general linear operator, step 1/L^2 with L = op.normBound():
 * u <- prox(u - F*(F u - data)/L^2) coefficient-wise. Monotone in the objective.
 * Stops when both the relative objective decrease and the relative iterate change fall
 * below the tolerance; otherwise returns converged = false after maxIterations.
 */
SolveReport solveGeneral(const LinearOperator& op, const CoefField& data, const PenaltySpec& pen,
                         const GeneralSolveOptions& options = {});

/// Gradient of sum w_j |u|^q: q w_j sign(u) |u|^{q-1}. Requires q > 1.
CoefField penaltyGradient(const CoefField& u, const PenaltySpec& pen,
                          Execution exec = Execution::parallel);

struct SourceConditionReport {
  bool satisfied = false;
  double gradientNormInBG = 0.0;
  std::vector<double> levelContributions;  ///< per-level terms of ||grad||^{p_G}_{B_G}
  DecayReport decay;
};

/**
 * Membership of the penalty gradient at u+ in B_G = rg F*, which realizes the
 * source condition F* w = grad without constructing w. Satisfied when the B_G
 * level contributions are finite and decay geometrically.
 */
SourceConditionReport checkSourceCondition(const CoefField& uTrue, const PenaltySpec& pen,
                                           const BesovSpace& adjointRange,
                                           Execution exec = Execution::parallel);

/// |b|^p - |a|^p - p sign(a) |a|^{p-1} (b - a)
double scalarBregmanGap(double a, double b, double p);

/// Bregman distance of the penalty at uTrue: P(u) - P(u+) - <grad P(u+), u - u+>. Requires q > 1.
double bregmanDistance(const CoefField& u, const CoefField& uTrue, const PenaltySpec& pen);

}  // namespace besov
