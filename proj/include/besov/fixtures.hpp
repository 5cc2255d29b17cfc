#pragma once

#include <string>
#include <vector>

#include "besov/planner.hpp"

namespace besov {

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace fixtures {

/// Smoothing of order eta in the Sobolev scale: F: H^{-eta} -> L_2, source B^{2 eta}_1.
ExactSignature sobolevSmoothing(const Rational& eta, const Rational& epsilon = Rational(1, 1000));

/// Besov smoothing with p_S = p_D: domain B^{-eta}_{1+theta}, source B^{-eta+theta}_{1+theta}.
ExactSignature besovBoundary(const Rational& eta, const Rational& theta,
                             const Rational& epsilon = Rational(1, 1000));

/// Besov smoothing with p_S < p_D: domain B^{-eta}_{3/2}, source B^{-eta+1}_{1+theta}.
ExactSignature besovInterior(const Rational& eta, const Rational& theta,
                             const Rational& epsilon = Rational(1, 1000));

/// Sobolev smoothing with the loose source H^eta; pair it with tighterSource().
ExactSignature looseSourceProblem(const Rational& eta, const Rational& epsilon);
/// B^{eta + 1/2 + 3 eps}_1, within H^eta but rewarded less by the direct plan.
ExactBesovSpace tighterSource(const Rational& eta, const Rational& epsilon);

}  // namespace fixtures

/// Evaluates the pinned planner fixtures in exact arithmetic.
std::vector<FixtureResult> runPinnedFixtures();

}  // namespace besov
