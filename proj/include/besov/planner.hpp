#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "besov/besov_space.hpp"
#include "besov/errors.hpp"
#include "besov/numeric.hpp"

namespace besov {

template <class Num>
Num defaultEpsilon() {
  if constexpr (is_exact_v<Num>) {
    return Rational(1, 1000);
  } else {
    return 1e-3;
  }
}

/**
 * Smoothness data of a linear inverse problem F: B_D -> L_2.
 *
 *  - domain        B_D, the domain of F (p_D > 1)
 *  - adjointRange  B_G = rg F*, models the smoothing of F; B_G within B_D*
 *  - source        B_S, the source condition u+ in B_S within B_D
 *  - epsilon       slack of the weakened-source penalty (> 0)
 */
template <class Num>
struct BasicSignature {
  BasicBesovSpace<Num> domain;
  BasicBesovSpace<Num> adjointRange;
  BasicBesovSpace<Num> source;
  Num epsilon = defaultEpsilon<Num>();

  int dimension() const { return domain.d; }
};

using ProblemSignature = BasicSignature<double>;
using ExactSignature = BasicSignature<Rational>;

template <class Num>
ProblemSignature toDouble(const BasicSignature<Num>& sig) {
  return {toDouble(sig.domain), toDouble(sig.adjointRange), toDouble(sig.source),
          toDouble(sig.epsilon)};
}

struct ConstraintCheck {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

/// Raised when a signature or a requested plan violates a constraint; carries the full report.
class InfeasibleProblem : public ValidationError {
 public:
  InfeasibleProblem(const std::string& context, std::vector<ConstraintCheck> checks)
      : ValidationError(summarize(context, checks)), checks_(std::move(checks)) {}

  const std::vector<ConstraintCheck>& checks() const { return checks_; }

 private:
  static std::string summarize(const std::string& context,
                               const std::vector<ConstraintCheck>& checks) {
    std::string message = context + ": violated";
    for (const ConstraintCheck& check : checks) {
      if (!check.satisfied) message += " [" + check.name + ": " + check.detail + "]";
    }
    return message;
  }

  std::vector<ConstraintCheck> checks_;
};

enum class PlanRule { direct, weakened, optimal };

/// Which branch of the optimal choice p = min{p_D, p_G} applies.
enum class OptimalCase {
  notApplicable,
  adjointAtLeastDomain,  ///< p_G >= p_D, p = p_D
  adjointBelowDomain,    ///< p_G < p_D, p = p_G and p_R = 2
};

/**
 * Penalty space B_R = B^{s_R}_{p_R}, penalty power p_R and the Sobolev index
 * sigma = s_R + d(1/2 - 1/p_R) of the O(sqrt(delta)) rate.
 */
template <class Num>
struct BasicPlan {
  PlanRule rule = PlanRule::direct;
  Num weakenedP{0};  ///< integrability p of the (weakened) source actually used
  BasicBesovSpace<Num> penaltySpace;
  Num penaltyPower{0};
  Num sigma{0};
  Num epsilonTilde{0};  ///< epsilon (p/p_S - 1), subtracted from the maximal s_R
  OptimalCase optimalCase = OptimalCase::notApplicable;
  bool rateSpaceIsPenaltySpace = false;  ///< p_R == 2, so B_R = H^{s_R} = H^sigma
  std::vector<ConstraintCheck> feasibility;
};

using RegularizationPlan = BasicPlan<double>;
using ExactPlan = BasicPlan<Rational>;

template <class Num>
std::string formatNumber(const Num& x) {
  if constexpr (is_exact_v<Num>) {
    return formatRational(x);
  } else {
    return formatDouble(x);
  }
}

std::string toString(PlanRule rule);
std::string toString(OptimalCase c);

namespace planner_detail {

template <class Num>
std::string show(const Num& x) {
  return formatNumber(x);
}

template <class Num>
std::string showSpace(const BasicBesovSpace<Num>& b) {
  return "(s=" + show(b.s) + ", p=" + show(b.p) + ")";
}

inline void require(const std::vector<ConstraintCheck>& checks, const std::string& context) {
  for (const ConstraintCheck& check : checks) {
    if (!check.satisfied) throw InfeasibleProblem(context, checks);
  }
}

template <class Num>
Num minOf(const Num& a, const Num& b) {
  return a < b ? a : b;
}

}  // namespace planner_detail

/// Evaluates every structural assumption on the signature; never throws.
template <class Num>
std::vector<ConstraintCheck> checkSignature(const BasicSignature<Num>& sig) {
  using planner_detail::show;
  using planner_detail::showSpace;
  std::vector<ConstraintCheck> checks;
  const auto& D = sig.domain;
  const auto& G = sig.adjointRange;
  const auto& S = sig.source;

  const bool finite = isFinite(D.s) && isFinite(D.p) && isFinite(G.s) && isFinite(G.p) &&
                      isFinite(S.s) && isFinite(S.p) && isFinite(sig.epsilon);
  checks.push_back({"finite parameters", finite, finite ? "ok" : "non-finite parameter"});
  if (!finite) return checks;

  const bool sameD = D.d == G.d && D.d == S.d && D.d >= 1;
  checks.push_back({"common dimension", sameD,
                    "d = " + std::to_string(D.d) + ", " + std::to_string(G.d) + ", " +
                        std::to_string(S.d)});
  checks.push_back({"domain p > 1", D.p > Num(1), "p_D = " + show(D.p)});
  const bool banach = D.p >= Num(1) && G.p >= Num(1) && S.p >= Num(1);
  checks.push_back({"Banach indices p >= 1", banach,
                    "p_D = " + show(D.p) + ", p_G = " + show(G.p) + ", p_S = " + show(S.p)});
  checks.push_back({"epsilon > 0", sig.epsilon > Num(0), "epsilon = " + show(sig.epsilon)});
  if (!sameD || !(D.p > Num(1)) || !banach) return checks;

  const BasicBesovSpace<Num> dualDomain = dualSpace(D);
  const bool smoothing = embedsOrEqual(G, dualDomain);
  checks.push_back({"adjoint range within dual domain", smoothing,
                    "B_G = " + showSpace(G) + ", B_D* = " + showSpace(dualDomain)});
  const bool sourceInDomain = embeds(S, D);
  checks.push_back({"source embeds in domain", sourceInDomain,
                    "ddim(B_S) = " + show(differentialDimension(S)) +
                        ", ddim(B_D) = " + show(differentialDimension(D)) +
                        ", p_S = " + show(S.p) + ", p_D = " + show(D.p)});
  checks.push_back({"source p <= adjoint range p", lessOrEqual(S.p, G.p),
                    "p_S = " + show(S.p) + ", p_G = " + show(G.p)});
  return checks;
}

template <class Num>
bool isValidSignature(const BasicSignature<Num>& sig) {
  const auto checks = checkSignature(sig);
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.satisfied; });
}

template <class Num>
void requireValidSignature(const BasicSignature<Num>& sig) {
  planner_detail::require(checkSignature(sig), "invalid problem signature");
}

namespace planner_detail {

// Appends the post-conditions every emitted plan must satisfy.
template <class Num>
void appendPlanChecks(const BasicSignature<Num>& sig, BasicPlan<Num>& plan) {
  const auto& R = plan.penaltySpace;
  const auto& S = sig.source;
  const Num half = Num(1) / Num(2);
  const Num pR = plan.penaltyPower;
  const bool rangeOk = pR > Num(1) + compareTolerance<Num>() && lessOrEqual(pR, Num(2));
  plan.feasibility.push_back(
      {"1 < p_R <= 2", rangeOk,
       "p_R = " + show(pR) + (approxEqual(pR, Num(1)) ? " (boundary p_R = 1 is excluded)" : "")});
  plan.feasibility.push_back({"p_R >= p_S", lessOrEqual(S.p, pR),
                              "p_R = " + show(pR) + ", p_S = " + show(S.p)});
  const Num ddimR = differentialDimension(R);
  const Num ddimS = differentialDimension(S);
  plan.feasibility.push_back({"ddim(B_R) < ddim(B_S)", strictlyGreater(ddimS, ddimR),
                              "ddim(B_R) = " + show(ddimR) + ", ddim(B_S) = " + show(ddimS)});
  plan.feasibility.push_back({"source embeds in penalty space", embedsOrEqual(S, R),
                              "B_S = " + showSpace(S) + ", B_R = " + showSpace(R)});
  const Num gap = plan.sigma - Num(R.d) * half - ddimR;
  plan.feasibility.push_back({"sigma - d/2 == ddim(B_R)", approxEqual(gap, Num(0)),
                              "difference " + show(gap)});
}

}  // namespace planner_detail

/**
 * Weakened-source plan for the integrability p of an intermediate source
 * space: p_R = (p + p_G)/p_G and the maximal admissible
 * s_R = (p s_S - p_G s_G)/(p + p_G) - d (p/p_S - 1)/(p + p_G) - epsilon (p/p_S - 1).
 *
 * Requires p_S <= p <= min{p_D, p_G}. At p = p_S the correction terms vanish
 * and the plan coincides with planDirect.
 */
template <class Num>
BasicPlan<Num> planWeakened(const BasicSignature<Num>& sig, const Num& p) {
  using planner_detail::show;
  auto checks = checkSignature(sig);
  planner_detail::require(checks, "planWeakened: invalid signature");

  const auto& D = sig.domain;
  const auto& G = sig.adjointRange;
  const auto& S = sig.source;
  const Num upper = planner_detail::minOf(D.p, G.p);
  checks.push_back({"p >= p_S", isFinite(p) && lessOrEqual(S.p, p),
                    "p = " + show(p) + ", p_S = " + show(S.p)});
  checks.push_back({"p <= min{p_D, p_G}", isFinite(p) && lessOrEqual(p, upper),
                    "p = " + show(p) + ", min{p_D, p_G} = " + show(upper)});
  planner_detail::require(checks, "planWeakened: p out of range");

  const Num d(sig.dimension());
  const Num pG = G.p;
  const Num excess = p / S.p - Num(1);
  BasicPlan<Num> plan;
  plan.rule = PlanRule::weakened;
  plan.weakenedP = p;
  plan.penaltyPower = (p + pG) / pG;
  plan.epsilonTilde = sig.epsilon * excess;
  const Num sR = (p * S.s - pG * G.s) / (p + pG) - d * excess / (p + pG) - plan.epsilonTilde;
  plan.penaltySpace = {sR, plan.penaltyPower, sig.dimension()};
  plan.sigma = sR + d * (Num(1) / Num(2) - Num(1) / plan.penaltyPower);
  plan.rateSpaceIsPenaltySpace = approxEqual(plan.penaltyPower, Num(2));
  plan.feasibility = std::move(checks);
  planner_detail::appendPlanChecks(sig, plan);
  planner_detail::require(plan.feasibility, "planWeakened: plan violates a constraint");
  return plan;
}

/**
 * Plan from the source condition as given: p_R = (p_S + p_G)/p_G,
 * s_R = (p_S s_S - p_G s_G)/(p_S + p_G), sigma = s_R + d(1/2 - 1/p_R).
 */
template <class Num>
BasicPlan<Num> planDirect(const BasicSignature<Num>& sig) {
  requireValidSignature(sig);
  BasicPlan<Num> plan = planWeakened(sig, sig.source.p);
  plan.rule = PlanRule::direct;
  return plan;
}

/**
 * epsilon-free rate objective
 * sigmaHat(p) = p/(p+p_G) ddim(B_S) + p_G/(p+p_G) (-s_G - d/p_G*),
 * strictly increasing in p whenever ddim(B_S) > -s_G - d/p_G*.
 */
template <class Num>
Num sigmaHat(const BasicSignature<Num>& sig, const Num& p) {
  using planner_detail::show;
  requireValidSignature(sig);
  const auto& G = sig.adjointRange;
  const auto& S = sig.source;
  const Num upper = planner_detail::minOf(sig.domain.p, G.p);
  if (!isFinite(p) || !lessOrEqual(S.p, p) || !lessOrEqual(p, upper)) {
    throw ValidationError("sigmaHat: p = " + show(p) + " outside [p_S, min{p_D, p_G}] = [" +
                          show(S.p) + ", " + show(upper) + "]");
  }
  const Num d(sig.dimension());
  // d / p_G* written as d (1 - 1/p_G), valid also for p_G = 1
  const Num dualDdim = -G.s - d * (Num(1) - Num(1) / G.p);
  return p / (p + G.p) * differentialDimension(S) + G.p / (p + G.p) * dualDdim;
}

/// Best rate among the weakened plans: p = min{p_D, p_G}.
template <class Num>
BasicPlan<Num> planOptimal(const BasicSignature<Num>& sig) {
  requireValidSignature(sig);
  const Num p = planner_detail::minOf(sig.domain.p, sig.adjointRange.p);
  BasicPlan<Num> plan = planWeakened(sig, p);
  plan.rule = PlanRule::optimal;
  plan.optimalCase = sig.adjointRange.p >= sig.domain.p ? OptimalCase::adjointAtLeastDomain
                                                        : OptimalCase::adjointBelowDomain;
  return plan;
}

/// Constraints for B_S within B^s_p within B_D and 1/p >= 1/p_G (strict where the criterion is).
template <class Num>
std::vector<ConstraintCheck> checkWeakenedSource(const BasicSignature<Num>& sig,
                                                 const BasicBesovSpace<Num>& candidate) {
  using planner_detail::show;
  const auto& D = sig.domain;
  const auto& G = sig.adjointRange;
  const auto& S = sig.source;
  const Num ddim = differentialDimension(candidate);
  std::vector<ConstraintCheck> checks;
  checks.push_back({"ddim(B_S) > ddim(B)", strictlyGreater(differentialDimension(S), ddim),
                    "ddim(B) = " + show(ddim)});
  checks.push_back({"p >= p_S", lessOrEqual(S.p, candidate.p), "p = " + show(candidate.p)});
  checks.push_back({"ddim(B) > ddim(B_D)", strictlyGreater(ddim, differentialDimension(D)),
                    "ddim(B_D) = " + show(differentialDimension(D))});
  checks.push_back({"p <= p_D", lessOrEqual(candidate.p, D.p), "p_D = " + show(D.p)});
  checks.push_back({"p <= p_G", lessOrEqual(candidate.p, G.p), "p_G = " + show(G.p)});
  return checks;
}

template <class Num>
bool isWeakenedSource(const BasicSignature<Num>& sig, const BasicBesovSpace<Num>& candidate) {
  const auto checks = checkWeakenedSource(sig, candidate);
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.satisfied; });
}

/// Rectangular sampling of the (1/p, s) plane; counts of 1 use the lower bound.
struct SourceGrid {
  double invPMin = 0.0;
  double invPMax = 1.0;
  int invPCount = 21;
  double sMin = -2.0;
  double sMax = 2.0;
  int sCount = 41;
};

/// Sampled weaker source conditions B^s_p with B_S within B^s_p within B_D and p <= p_G.
std::vector<BesovSpace> feasibleWeakenedSources(const ProblemSignature& sig,
                                                const SourceGrid& grid);

/// CSV with header p,inv_p,s,ddim
std::string weakenedSourcesCsv(const std::vector<BesovSpace>& spaces);

/**
 * Rates for a source B_S and a tighter source B_T within B_S, under the
 * direct and the optimal plans. The epsilon-free optimal delta equals
 * p/(p + p_G) (ddim(B_T) - ddim(B_S)) with p = min{p_D, p_G}: p_D/(p_D+p_G)
 * times the gap when p_G >= p_D and half the gap otherwise.
 */
template <class Num>
struct SourceComparison {
  BasicPlan<Num> directLoose, directTight, optimalLoose, optimalTight;
  Num ddimGap{0};
  Num directDelta{0};            ///< sigma_direct(B_T) - sigma_direct(B_S)
  Num optimalDelta{0};           ///< sigma_opt(B_T) - sigma_opt(B_S), epsilon terms included
  Num optimalDeltaEpsilonFree{0};///< same with epsilonTilde added back to both
  Num closedFormDelta{0};
  OptimalCase optimalCase = OptimalCase::notApplicable;
};

template <class Num>
SourceComparison<Num> compareSources(const BasicSignature<Num>& sig,
                                     const BasicBesovSpace<Num>& tighter) {
  using planner_detail::showSpace;
  requireValidSignature(sig);
  validate(tighter);
  if (tighter.d != sig.dimension() || !embedsOrEqual(tighter, sig.source)) {
    throw ValidationError("compareSources: tighter source " + showSpace(tighter) +
                          " does not embed in B_S = " + showSpace(sig.source));
  }
  BasicSignature<Num> tight = sig;
  tight.source = tighter;
  requireValidSignature(tight);

  SourceComparison<Num> out;
  out.directLoose = planDirect(sig);
  out.directTight = planDirect(tight);
  out.optimalLoose = planOptimal(sig);
  out.optimalTight = planOptimal(tight);
  out.optimalCase = out.optimalLoose.optimalCase;
  out.ddimGap = differentialDimension(tighter) - differentialDimension(sig.source);
  out.directDelta = out.directTight.sigma - out.directLoose.sigma;
  out.optimalDelta = out.optimalTight.sigma - out.optimalLoose.sigma;
  out.optimalDeltaEpsilonFree = (out.optimalTight.sigma + out.optimalTight.epsilonTilde) -
                                (out.optimalLoose.sigma + out.optimalLoose.epsilonTilde);
  const Num& pD = sig.domain.p;
  const Num& pG = sig.adjointRange.p;
  out.closedFormDelta = out.optimalCase == OptimalCase::adjointAtLeastDomain
                            ? pD / (pD + pG) * out.ddimGap
                            : out.ddimGap / Num(2);
  if (embeds(tighter, sig.source) && !strictlyGreater(out.closedFormDelta, Num(0))) {
    throw NumericalError("compareSources: optimal-plan delta is not positive for a strictly "
                         "tighter source");
  }
  return out;
}

}  // namespace besov
