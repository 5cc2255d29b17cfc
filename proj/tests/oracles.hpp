#pragma once

// Reference computations used only by the tests. They re-derive results from
// the definitions and never call the library routine under test.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "besov/besov_space.hpp"
#include "besov/coef_field.hpp"
#include "besov/planner.hpp"

namespace oracle {

/// (sum_j 2^{p (s + d(1/2 - 1/p)) j} sum_k |u_jk|^p)^{1/p} by plain summation.
inline double besovNorm(const besov::CoefField& u, double s, double p) {
  long double total = 0.0L;
  for (int j = 0; j <= u.maxLevel(); ++j) {
    const long double weight = std::pow(2.0L, p * (s + 0.5 - 1.0 / p) * j);
    for (std::int64_t k = 0; k < (std::int64_t{1} << j); ++k) {
      total += weight * std::pow(std::fabs(static_cast<long double>(u.at({j, k}))), p);
    }
  }
  return static_cast<double>(std::pow(total, 1.0L / p));
}

/// Golden-section minimization of a unimodal f on [lo, hi].
inline double goldenSection(const std::function<double(double)>& f, double lo, double hi,
                            double tol = 1e-15) {
  const double invPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invPhi * (b - a);
  double d = a + invPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && (b - a) > tol * std::max(1.0, std::fabs(a) + std::fabs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

inline double scalarPhi(double m, double y, double alpha, double w, double q, double t) {
  const double r = m * t - y;
  return r * r + alpha * w * std::pow(std::fabs(t), q);
}

/**
 * Minimizer of (m t - y)^2 + alpha w |t|^q on [-R, R], R = 2|y/m| + 1: a grid
 * search refined around the best cell until the cells are `resolution` wide,
 * then golden section inside the final cell. The objective is convex, so the
 * best grid cell always brackets the global minimizer.
 */
inline double scalarProxOracle(double m, double y, double alpha, double w, double q,
                               double resolution = 1e-6) {
  auto phi = [&](double t) { return scalarPhi(m, y, alpha, w, q, t); };
  if (m == 0.0) return 0.0;
  double lo = -(2.0 * std::fabs(y / m) + 1.0);
  double hi = -lo;
  constexpr int kCells = 1000;
  double best = 0.0;
  for (;;) {
    const double step = (hi - lo) / kCells;
    double bestValue = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kCells; ++i) {
      const double t = lo + i * step;
      const double v = phi(t);
      if (v < bestValue) {
        bestValue = v;
        best = t;
      }
    }
    lo = best - step;
    hi = best + step;
    if (step <= resolution) break;
  }
  const double refined = goldenSection(phi, lo, hi);
  return phi(refined) <= phi(0.0) ? refined : 0.0;
}

/// Central difference of f at x with step h.
inline double centralDifference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline besov::CoefField randomField(int maxLevel, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  besov::CoefField u(maxLevel);
  for (double& x : u.values()) x = normal(rng);
  return u;
}

/// Uniform rational in [lo, hi] with a denominator in 1..12.
inline besov::Rational randomRational(std::mt19937_64& rng, const besov::Rational& lo,
                                      const besov::Rational& hi) {
  std::uniform_int_distribution<int> den(1, 12);
  const int n = den(rng);
  std::uniform_int_distribution<int> num(0, n);
  return lo + (hi - lo) * besov::Rational(num(rng), n);
}

/**
 * Random valid signature in d = 1, built directly from the structural
 * assumptions: B_G within dual(B_D) (sometimes equal to it), B_S within B_D
 * and p_S <= p_G.
 */
inline besov::ExactSignature randomExactSignature(std::mt19937_64& rng) {
  using besov::Rational;
  const Rational pD = 1 + randomRational(rng, Rational(1, 8), 3);
  const Rational pDStar = pD / (pD - 1);
  const Rational sD = randomRational(rng, -3, 1);
  Rational pG, sG;
  if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
    pG = pDStar;
    sG = -sD;
  } else {
    pG = 1 + (pDStar - 1) * randomRational(rng, 0, 1);
    sG = -sD - 1 / pDStar + 1 / pG + randomRational(rng, Rational(1, 16), 2);
  }
  const Rational pS = 1 + (std::min(pD, pG) - 1) * randomRational(rng, 0, 1);
  const Rational sS = sD - 1 / pD + 1 / pS + randomRational(rng, Rational(1, 16), 3);
  return {{sD, pD, 1}, {sG, pG, 1}, {sS, pS, 1}, Rational(1, 1000)};
}

/// Penalty parameters (p_R, s_R) by hand evaluation of the weakened-source formulas.
struct HandPlan {
  besov::Rational pR, sR, sigma;
};

inline HandPlan handWeakened(const besov::ExactSignature& sig, const besov::Rational& p) {
  const auto& S = sig.source;
  const auto& G = sig.adjointRange;
  const besov::Rational d = sig.dimension();
  const besov::Rational shift = p / S.p - 1;
  HandPlan h;
  h.pR = (p + G.p) / G.p;
  h.sR = (p * S.s - G.p * G.s) / (p + G.p) - d * shift / (p + G.p) - sig.epsilon * shift;
  h.sigma = h.sR + d * (besov::Rational(1, 2) - 1 / h.pR);
  return h;
}

}  // namespace oracle
