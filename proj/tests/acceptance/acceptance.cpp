// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "besov/experiment.hpp"
#include "besov/fixtures.hpp"
#include "besov/norms.hpp"
#include "besov/planner.hpp"
#include "besov/prox.hpp"
#include "besov/solver.hpp"
#include "besov/synthesis.hpp"
#include "oracles.hpp"

using besov::CoefField;
using besov::ExactSignature;
using besov::ProblemSignature;
using besov::Rational;
namespace fx = besov::fixtures;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail << "FIRST VIOLATION: " << what << "; ";
    }
  }
};

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", x);
  return buffer;
}

// 1. Sobolev smoothing, eta = 1: direct (3/2, 0, -1/6), optimal (2, 1/4 - eps~, 1/4 - eps~).
void sobolevSmoothingPlans(Outcome& o) {
  const double eps = 1e-3;
  const ProblemSignature sig{{-1, 2, 1}, {1, 2, 1}, {2, 1, 1}, eps};
  const auto direct = besov::planDirect(sig);
  o.require(near(direct.penaltyPower, 1.5, 1e-12), "direct p_R");
  o.require(near(direct.penaltySpace.s, 0.0, 1e-12), "direct s_R");
  o.require(near(direct.sigma, -1.0 / 6.0, 1e-12), "direct sigma");
  const auto opt = besov::planOptimal(sig);
  const double epsTilde = eps * (2.0 / 1.0 - 1.0);
  o.require(near(opt.epsilonTilde, epsTilde, 1e-12), "optimal eps~");
  o.require(near(opt.penaltyPower, 2.0, 1e-12), "optimal p_R");
  o.require(near(opt.penaltySpace.s, 0.25 - epsTilde, 1e-12), "optimal s_R");
  o.require(near(opt.sigma, 0.25 - epsTilde, 1e-12), "optimal sigma");
  const auto exactDirect = besov::planDirect(fx::sobolevSmoothing(1, Rational(1, 1000)));
  const auto exactOpt = besov::planOptimal(fx::sobolevSmoothing(1, Rational(1, 1000)));
  o.require(exactDirect.sigma == Rational(-1, 6), "exact direct sigma");
  o.require(exactOpt.sigma == Rational(1, 4) - Rational(1, 1000), "exact optimal sigma");
  o.detail << "direct (p_R, s_R, sigma) = (" << fmt(direct.penaltyPower) << ", "
           << fmt(direct.penaltySpace.s) << ", " << fmt(direct.sigma) << "); optimal = ("
           << fmt(opt.penaltyPower) << ", " << fmt(opt.penaltySpace.s) << ", " << fmt(opt.sigma)
           << ")";
}

// 2. Besov interior case, eta = 1, theta = 1/4, against the closed forms evaluated by hand.
void besovInteriorPlans(Outcome& o) {
  const double eta = 1.0, theta = 0.25, eps = 1e-3;
  const double pS = 1 + theta, pD = 1.5;
  const ProblemSignature sig{{-eta, pD, 1}, {eta, 3, 1}, {-eta + 1, pS, 1}, eps};
  const auto worst = besov::planWeakened(sig, pS);
  const double worstHand = -eta + 0.5 + (theta - 2) / (theta + 4);
  o.require(near(worst.sigma, worstHand, 1e-12), "worst-case sigma");
  const auto opt = besov::planOptimal(sig);
  const double epsTilde = eps * (pD / pS - 1);
  const double optHand = -eta + 1.0 / 6.0 + (1.0 / 9.0) * (2 * theta - 1) / (theta + 1) - epsTilde;
  o.require(near(opt.sigma, optHand, 1e-12), "optimal sigma");
  const double sROptHand = -eta + 1.0 / 3.0 + (1.0 / 9.0) * (2 * theta - 1) / (theta + 1) - epsTilde;
  o.require(near(opt.penaltySpace.s, sROptHand, 1e-12), "optimal s_R");
  o.require(near(opt.penaltyPower, pD, 1e-12), "optimal p_R");
  o.detail << "worst sigma " << fmt(worst.sigma) << " (hand " << fmt(worstHand)
           << "), optimal sigma " << fmt(opt.sigma) << " (hand " << fmt(optHand) << ")";
}

// 3. Tighter source B_1^{eta+1/2+3eps} within H^eta, eps = 1e-6.
void tighterSourceReversal(Outcome& o) {
  const double eta = 1.0, eps = 1e-6;
  const ProblemSignature loose{{-eta, 2, 1}, {eta, 2, 1}, {eta, 2, 1}, eps};
  const besov::BesovSpace tight{eta + 0.5 + 3 * eps, 1, 1};
  const auto cmp = besov::compareSources(loose, tight);
  o.require(near(cmp.directLoose.sigma, 0.0, 1e-12), "direct sigma of loose source is 0");
  o.require(near(cmp.directTight.sigma, -eta / 3 + eps, 1e-12), "direct sigma of tight source");
  o.require(cmp.directTight.sigma < cmp.directLoose.sigma, "direct plan penalizes tightening");
  o.require(cmp.optimalDelta > 0.0, "optimal delta strictly positive");
  // closed form p_D/(p_D+p_G) times the differential-dimension gap, by hand
  const double gap = (tight.s - 1.0 / tight.p) - (eta - 0.5);
  const double closedForm = 2.0 / (2.0 + 2.0) * gap;
  o.require(near(cmp.optimalDeltaEpsilonFree, closedForm, 1e-10), "delta matches closed form");
  o.detail << "direct sigma loose " << fmt(cmp.directLoose.sigma) << " > tight "
           << fmt(cmp.directTight.sigma) << "; optimal delta " << fmt(cmp.optimalDelta)
           << " > 0; delta without eps~ terms " << fmt(cmp.optimalDeltaEpsilonFree)
           << " vs closed form " << fmt(closedForm);
}

// 4. Penalty-space inequalities on 200 random signatures, exact arithmetic.
void penaltyInequalities(Outcome& o) {
  std::mt19937_64 rng(20240601);
  int plans = 0;
  for (int i = 0; i < 200; ++i) {
    const ExactSignature sig = oracle::randomExactSignature(rng);
    const Rational upper = std::min(sig.domain.p, sig.adjointRange.p);
    std::vector<besov::ExactPlan> emitted{besov::planDirect(sig), besov::planOptimal(sig),
                                          besov::planWeakened(sig, (sig.source.p + upper) / 2)};
    for (const auto& plan : emitted) {
      ++plans;
      const Rational ddimR = besov::differentialDimension(plan.penaltySpace);
      o.require(plan.penaltyPower >= sig.source.p, "p_R >= p_S");
      o.require(plan.penaltyPower > 1 && plan.penaltyPower <= 2, "1 < p_R <= 2");
      o.require(ddimR < besov::differentialDimension(sig.source), "ddim(B_R) < ddim(B_S)");
      o.require(ddimR == plan.sigma - Rational(1, 2), "ddim(B_R) == sigma - d/2");
    }
    const auto numeric = besov::planOptimal(besov::toDouble(sig));
    o.require(near(besov::differentialDimension(numeric.penaltySpace), numeric.sigma - 0.5, 1e-12),
              "double path ddim(B_R) == sigma - d/2");
  }
  o.detail << plans << " plans from 200 signatures, exact rational checks";
}

// 5. sigma-hat strictly increasing; the optimal plan dominates every weakened plan.
void sigmaHatMonotone(Outcome& o) {
  std::mt19937_64 rng(20240602);
  int signatures = 0;
  Rational smallestStep = 1000;
  while (signatures < 100) {
    const ExactSignature sig = oracle::randomExactSignature(rng);
    const Rational upper = std::min(sig.domain.p, sig.adjointRange.p);
    const Rational d = 1;
    const Rational dualG = -sig.adjointRange.s - d * (1 - 1 / sig.adjointRange.p);
    if (!(besov::differentialDimension(sig.source) > dualG) || upper == sig.source.p) continue;
    ++signatures;
    const auto opt = besov::planOptimal(sig);
    Rational previous;
    for (int k = 0; k < 20; ++k) {
      const Rational p = sig.source.p + (upper - sig.source.p) * Rational(k, 19);
      const Rational value = besov::sigmaHat(sig, p);
      if (k > 0) {
        o.require(value > previous, "sigma-hat strictly increasing");
        smallestStep = std::min(smallestStep, value - previous);
      }
      previous = value;
      const auto weak = besov::planWeakened(sig, p);
      o.require(opt.sigma >= weak.sigma - opt.epsilonTilde, "optimal sigma dominates");
    }
  }
  o.detail << signatures << " signatures x 20 p values; smallest increment "
           << fmt(besov::toDouble(smallestStep));
}

// 6. Prox and solvers against brute-force oracles.
void solverOracles(Outcome& o) {
  std::mt19937_64 rng(20240603);
  std::uniform_real_distribution<double> uq(1, 2), um(0.05, 2), uy(-5, 5), logAlpha(-3, 0.3),
      logW(-1, 1);
  double proxError = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double q = i % 50 == 0 ? 1.0 : (i % 50 == 1 ? 2.0 : uq(rng));
    const double m = (rng() & 1 ? 1 : -1) * um(rng), y = uy(rng);
    const double alpha = std::pow(10.0, logAlpha(rng)), w = std::pow(10.0, logW(rng));
    const double t = besov::scalarProx(m, y, alpha, w, q);
    proxError = std::max(proxError, std::fabs(t - oracle::scalarProxOracle(m, y, alpha, w, q)));
  }
  o.require(proxError < 1e-5, "scalarProx vs grid + golden section");

  double diagonalError = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int J = 3;
    const double eta = std::uniform_real_distribution<double>(0, 2)(rng);
    const besov::DiagonalScaleOperator op(eta, J);
    const CoefField data = oracle::randomField(J, rng);
    const besov::PenaltySpec pen{{std::uniform_real_distribution<double>(-1, 1)(rng), 1.5, 1},
                                 uq(rng), std::pow(10.0, logAlpha(rng))};
    const auto report = besov::solveDiagonal(op, data, pen);
    // full objective as a function of one coordinate, others held at the solver output
    for (std::size_t idx = 0; idx < data.size(); ++idx) {
      auto objective = [&](double t) {
        double total = 0.0;
        for (std::size_t k = 0; k < data.size(); ++k) {
          const int j = CoefField::levelOf(k);
          const double u = k == idx ? t : report.minimizer.values()[k];
          const double r = std::exp2(-eta * j) * u - data.values()[k];
          const double wj = std::exp2(pen.power * (pen.space.s + 0.5 - 1 / pen.space.p) * j);
          total += r * r + pen.alpha * wj * std::pow(std::fabs(u), pen.power);
        }
        return total;
      };
      // the minimizer lies within |data| / mu of the origin
      const double radius =
          std::fabs(data.values()[idx]) / std::exp2(-eta * CoefField::levelOf(idx)) + 1.0;
      double lo = -radius, hi = radius, best = 0;
      for (int round = 0; round < 2; ++round) {
        const double step = (hi - lo) / 1000;
        double bestValue = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 1000; ++i) {
          const double v = objective(lo + i * step);
          if (v < bestValue) {
            bestValue = v;
            best = lo + i * step;
          }
        }
        lo = best - step;
        hi = best + step;
      }
      // bisection on the hand-written slope where it changes sign, else the kink at 0
      const int j = CoefField::levelOf(idx);
      const double mu = std::exp2(-eta * j);
      const double wj = std::exp2(pen.power * (pen.space.s + 0.5 - 1 / pen.space.p) * j);
      auto slope = [&](double t) {
        const double penalty = t == 0.0 ? 0.0
                                        : pen.alpha * wj * pen.power * std::copysign(1.0, t) *
                                              std::pow(std::fabs(t), pen.power - 1);
        return 2 * mu * (mu * t - data.values()[idx]) + penalty;
      };
      if (slope(lo) < 0 && slope(hi) > 0) {
        for (int it = 0; it < 200 && lo < hi; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (mid == lo || mid == hi) break;
          (slope(mid) < 0 ? lo : hi) = mid;
        }
        best = 0.5 * (lo + hi);
      } else {
        best = oracle::goldenSection(objective, lo, hi);
      }
      if (objective(0.0) <= objective(best)) best = 0.0;
      diagonalError = std::max(diagonalError, std::fabs(best - report.minimizer.values()[idx]));
    }
  }
  o.require(diagonalError < 1e-6, "solveDiagonal vs coordinate brute force");

  double generalError = 0.0;
  for (int trial = 0; trial < 12; ++trial) {
    const double q = trial % 3 == 0 ? 2.0 : 1.1 + 0.9 * std::uniform_real_distribution<double>()(rng);
    const besov::DiagonalScaleOperator op(0.25 + 0.1 * trial, 6);
    const CoefField data = oracle::randomField(6, rng);
    const besov::PenaltySpec pen{{0.1, 1.5, 1}, q, 0.05 + 0.02 * trial};
    const auto exact = besov::solveDiagonal(op, data, pen);
    const auto iterative = besov::solveGeneral(op, data, pen);
    o.require(iterative.converged, "solveGeneral converged");
    for (std::size_t k = 0; k < data.size(); ++k) {
      generalError = std::max(generalError, std::fabs(iterative.minimizer.values()[k] -
                                                      exact.minimizer.values()[k]));
    }
  }
  o.require(generalError < 1e-8, "solveGeneral vs solveDiagonal");
  o.detail << "prox max err " << fmt(proxError) << " (1000 tuples), diagonal max err "
           << fmt(diagonalError) << " (50 J=3 instances), general max err " << fmt(generalError);
}

// 7. Gradient by finite differences, Bregman nonnegativity, fitted scalar lower bound.
void gradientAndBregman(Outcome& o) {
  std::mt19937_64 rng(20240604);
  const double qs[] = {1.25, 1.5, 2.0};
  double worstRelative = 0.0;
  for (int i = 0; i < 100; ++i) {
    const besov::PenaltySpec pen{{0.2 * (i % 5) - 0.4, 1.5, 1}, qs[i % 3], 1.0};
    const CoefField u = oracle::randomField(3, rng);
    const CoefField grad = besov::penaltyGradient(u, pen);
    for (std::size_t k = 0; k < u.size(); ++k) {
      auto f = [&](double x) {
        double total = 0.0;
        for (std::size_t n = 0; n < u.size(); ++n) {
          const int j = CoefField::levelOf(n);
          const double wj = std::exp2(pen.power * (pen.space.s + 0.5 - 1 / pen.space.p) * j);
          total += wj * std::pow(std::fabs(n == k ? x : u.values()[n]), pen.power);
        }
        return total;
      };
      const double x0 = u.values()[k];
      const double fd = oracle::centralDifference(f, x0, 1e-5 * std::max(1.0, std::fabs(x0)));
      worstRelative =
          std::max(worstRelative, std::fabs(grad.values()[k] - fd) / std::max(1.0, std::fabs(fd)));
    }
  }
  o.require(worstRelative < 1e-6, "penaltyGradient vs central differences");

  double smallestBregman = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const besov::PenaltySpec pen{{0.3, 1.5, 1}, 1.05 + 0.95 * (i % 20) / 19.0, 1.0};
    const CoefField a = oracle::randomField(4, rng);
    CoefField b = oracle::randomField(4, rng, 0.1 + i % 7);
    if (i % 2 == 1) {
      // nearby pair
      const CoefField step = oracle::randomField(4, rng, 1e-3);
      for (std::size_t k = 0; k < b.size(); ++k) b.values()[k] = a.values()[k] + step.values()[k];
    }
    const double value = besov::bregmanDistance(b, a, pen);
    smallestBregman = std::min(smallestBregman, value);
    o.require(value >= 0.0, "bregmanDistance >= 0");
  }

  int buckets = 0;
  double smallestK = std::numeric_limits<double>::infinity();
  std::uniform_real_distribution<double> unit(-1, 1);
  for (double p : {1.25, 1.5, 1.75, 2.0}) {
    for (double C : {0.5, 1.0, 4.0}) {
      for (double L : {0.5, 2.0}) {
        // fit k over a grid of the closed box, boundary included
        double k = std::numeric_limits<double>::infinity();
        const int n = 200;
        for (int ia = 0; ia <= n; ++ia) {
          const double a = -C + 2 * C * ia / n;
          for (int ih = 0; ih <= n; ++ih) {
            const double h = -L + 2 * L * ih / n;
            if (h == 0.0) continue;
            k = std::min(k, besov::scalarBregmanGap(a, a + h, p) / (h * h));
          }
        }
        o.require(k > 0.0, "fitted k positive");
        smallestK = std::min(smallestK, k);
        ++buckets;
        for (int s = 0; s < 1000; ++s) {
          const double a = C * unit(rng), h = L * unit(rng), b = a + h;
          const double gap = besov::scalarBregmanGap(a, b, p);
          const double roundoff =
              64 * std::numeric_limits<double>::epsilon() *
              (std::pow(std::fabs(a), p) + std::pow(std::fabs(b), p) +
               p * std::pow(std::fabs(a), p - 1) * std::fabs(h));
          o.require(gap >= k * h * h - roundoff, "scalar lower bound on fresh samples");
        }
      }
    }
  }
  o.detail << "gradient max rel err " << fmt(worstRelative) << "; min Bregman "
           << fmt(smallestBregman) << " over 1000 pairs; " << buckets
           << " (p, C, L) buckets, smallest fitted k " << fmt(smallestK);
}

// 8. Rate experiment for the Sobolev smoothing problem with the optimal plan, five seeds.
void rateExperiment(Outcome& o) {
  besov::ExperimentConfig config;
  config.signature = {{-1, 2, 1}, {1, 2, 1}, {2, 1, 1}, 1e-3};
  config.plan.rule = besov::PlanRule::optimal;
  config.eta = 1.0;
  config.maxLevel = 12;
  const auto start = std::chrono::steady_clock::now();
  double minSlope = 1e9, maxSlope = -1e9, minR2 = 1e9;
  int maxInversions = 0;
  for (std::uint64_t seed : {42u, 43u, 44u, 45u, 46u}) {
    config.seed = seed;
    const auto report = besov::runRateExperiment(config);
    minSlope = std::min(minSlope, report.fit.slope);
    maxSlope = std::max(maxSlope, report.fit.slope);
    minR2 = std::min(minR2, report.fit.rSquared);
    maxInversions = std::max(maxInversions, report.errorBRInversions);
    o.require(report.fit.slope >= 0.45, "slope >= 0.45 for seed " + std::to_string(seed));
    o.require(report.fit.rSquared >= 0.98, "R^2 >= 0.98 for seed " + std::to_string(seed));
    o.require(report.errorBRInversions <= 1, "errorBR at most one inversion");
    for (const auto& row : report.rows) {
      o.require(std::isfinite(row.errorHSigma) && std::isfinite(row.errorBR), "finite errors");
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 60.0, "runtime under 60 s");
  o.detail << "slopes in [" << fmt(minSlope) << ", " << fmt(maxSlope) << "], min R^2 "
           << fmt(minR2) << ", max errorBR inversions " << maxInversions << ", " << fmt(seconds)
           << " s";
}

// 9. Source condition holds for the direct penalty and fails with s_R + 1.
void sourceCondition(Outcome& o) {
  const std::vector<std::pair<std::string, ExactSignature>> problems{
      {"sobolev", fx::sobolevSmoothing(1)},
      {"interior", fx::besovInterior(1, Rational(1, 4))},
      {"boundary", fx::besovBoundary(1, Rational(1, 2))},
  };
  double worstSlope = -1e9, bestInflatedSlope = 1e9;
  for (const auto& [name, exact] : problems) {
    const ProblemSignature sig = besov::toDouble(exact);
    const besov::PenaltySpec pen = besov::penaltyFromPlan(besov::planDirect(sig), 1.0);
    besov::PenaltySpec inflated = pen;
    inflated.space.s += 1.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const CoefField u = besov::makeSource(sig.source, 12, besov::kDefaultSourceMargin, seed);
      const auto report = besov::checkSourceCondition(u, pen, sig.adjointRange);
      o.require(report.satisfied, name + ": satisfied");
      o.require(report.decay.decaying && report.decay.rate < 1.0, name + ": geometric decay");
      worstSlope = std::max(worstSlope, report.decay.slope);
      const auto flipped = besov::checkSourceCondition(u, inflated, sig.adjointRange);
      o.require(!flipped.satisfied, name + ": inflated s_R flips the verdict");
      bestInflatedSlope = std::min(bestInflatedSlope, flipped.decay.slope);
    }
  }
  o.detail << "3 problems x 5 seeds; worst decay slope " << fmt(worstSlope)
           << " per level, inflated penalties grow with slope >= " << fmt(bestInflatedSlope);
}

// 10. besovNorm(u, b) <= besovNorm(u, a) whenever embeds(a, b).
void embeddingInvariant(Outcome& o) {
  std::mt19937_64 rng(20240605);
  std::uniform_real_distribution<double> us(-3, 3), up(1, 5), scale(-3, 3);
  std::uniform_int_distribution<int> level(0, 10);
  int pairs = 0;
  double worstRatio = 0.0;
  while (pairs < 500) {
    const besov::BesovSpace a{us(rng), up(rng), 1}, b{us(rng), up(rng), 1};
    if (!besov::embeds(a, b)) continue;
    ++pairs;
    CoefField u = oracle::randomField(level(rng), rng, std::pow(10.0, scale(rng)));
    if (pairs % 4 == 0) {
      // sparse field
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (rng() % 5 != 0) u.values()[k] = 0.0;
      }
    }
    const double na = besov::besovNorm(u, a), nb = besov::besovNorm(u, b);
    if (na > 0) worstRatio = std::max(worstRatio, nb / na);
    o.require(nb <= na * (1 + 1e-12), "norm ordering");
  }
  o.detail << pairs << " (field, a, b) triples; max norm ratio " << fmt(worstRatio);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"sobolev smoothing plans", sobolevSmoothingPlans},
      {"besov interior plans", besovInteriorPlans},
      {"tighter source reversal", tighterSourceReversal},
      {"penalty space inequalities", penaltyInequalities},
      {"sigma-hat monotonicity", sigmaHatMonotone},
      {"solver oracle equivalence", solverOracles},
      {"gradient and bregman checks", gradientAndBregman},
      {"rate experiment", rateExperiment},
      {"source condition check", sourceCondition},
      {"embedding norm ordering", embeddingInvariant},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "threw: " << e.what();
    }
    std::printf("%s [%d] %s: %s\n", o.passed ? "PASS" : "FAIL", index, name.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
