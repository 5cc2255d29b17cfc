#include "besov/fixtures.hpp"

namespace besov {
namespace fixtures {

ExactSignature sobolevSmoothing(const Rational& eta, const Rational& epsilon) {
  return {{-eta, 2, 1}, {eta, 2, 1}, {2 * eta, 1, 1}, epsilon};
}

ExactSignature besovBoundary(const Rational& eta, const Rational& theta,
                             const Rational& epsilon) {
  const Rational p = 1 + theta;
  return {{-eta, p, 1}, {eta, p / theta, 1}, {-eta + theta, p, 1}, epsilon};
}

ExactSignature besovInterior(const Rational& eta, const Rational& theta,
                             const Rational& epsilon) {
  return {{-eta, Rational(3, 2), 1}, {eta, 3, 1}, {-eta + 1, 1 + theta, 1}, epsilon};
}

ExactSignature looseSourceProblem(const Rational& eta, const Rational& epsilon) {
  return {{-eta, 2, 1}, {eta, 2, 1}, {eta, 2, 1}, epsilon};
}

ExactBesovSpace tighterSource(const Rational& eta, const Rational& epsilon) {
  return {eta + Rational(1, 2) + 3 * epsilon, 1, 1};
}

}  // namespace fixtures

namespace {

class Recorder {
 public:
  void expect(const std::string& name, const Rational& actual, const Rational& expected) {
    FixtureResult r{name, actual == expected, ""};
    r.detail = "got " + formatRational(actual) + ", expected " + formatRational(expected);
    results_.push_back(std::move(r));
  }

  void expectTrue(const std::string& name, bool ok, const std::string& detail) {
    results_.push_back({name, ok, detail});
  }

  template <class Fn>
  void guard(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      results_.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }

  std::vector<FixtureResult> take() { return std::move(results_); }

 private:
  std::vector<FixtureResult> results_;
};

}  // namespace

std::vector<FixtureResult> runPinnedFixtures() {
  Recorder rec;
  const Rational eta = 1;
  const Rational eps(1, 1000);

  rec.guard("sobolev smoothing", [&] {
    const auto sig = fixtures::sobolevSmoothing(eta, eps);
    const auto direct = planDirect(sig);
    rec.expect("sobolev smoothing / direct p_R", direct.penaltyPower, Rational(3, 2));
    rec.expect("sobolev smoothing / direct s_R", direct.penaltySpace.s, 0);
    rec.expect("sobolev smoothing / direct sigma", direct.sigma, Rational(-1, 6));
    const auto opt = planOptimal(sig);
    rec.expect("sobolev smoothing / optimal p_R", opt.penaltyPower, 2);
    rec.expect("sobolev smoothing / optimal s_R", opt.penaltySpace.s, Rational(1, 4) - eps);
    rec.expect("sobolev smoothing / optimal sigma", opt.sigma, Rational(1, 4) - eps);
    rec.expect("sobolev smoothing / optimal eps_tilde", opt.epsilonTilde, eps);
  });

  rec.guard("besov boundary", [&] {
    const Rational theta(1, 4);
    const auto sig = fixtures::besovBoundary(eta, theta, eps);
    const auto direct = planDirect(sig);
    const auto opt = planOptimal(sig);
    rec.expect("besov boundary / p_R", direct.penaltyPower, 1 + theta);
    rec.expect("besov boundary / s_R", direct.penaltySpace.s,
               -eta + theta * theta / (theta + 1));
    rec.expect("besov boundary / sigma", direct.sigma, -eta + theta - Rational(1, 2));
    rec.expectTrue("besov boundary / optimal collapses to direct",
                   opt.penaltySpace == direct.penaltySpace && opt.sigma == direct.sigma &&
                       opt.epsilonTilde == 0,
                   "optimal sigma " + formatRational(opt.sigma));
  });

  rec.guard("besov interior", [&] {
    const Rational theta(1, 4);
    const auto sig = fixtures::besovInterior(eta, theta, eps);
    const auto direct = planDirect(sig);
    rec.expect("besov interior / direct p_R", direct.penaltyPower, (4 + theta) / 3);
    rec.expect("besov interior / direct s_R", direct.penaltySpace.s,
               -eta + (theta + 1) / (theta + 4));
    rec.expect("besov interior / direct sigma", direct.sigma,
               -eta + Rational(1, 2) + (theta - 2) / (theta + 4));
    const auto opt = planOptimal(sig);
    const Rational epsTilde = eps * (Rational(3, 2) / (1 + theta) - 1);
    const Rational shift = Rational(1, 9) * (2 * theta - 1) / (theta + 1);
    rec.expect("besov interior / optimal p_R", opt.penaltyPower, Rational(3, 2));
    rec.expect("besov interior / optimal s_R", opt.penaltySpace.s,
               -eta + Rational(1, 3) + shift - epsTilde);
    rec.expect("besov interior / optimal sigma", opt.sigma,
               -eta + Rational(1, 6) + shift - epsTilde);

    // theta -> 0: source B^{-eta+1}_1
    const auto rough = planOptimal(fixtures::besovInterior(eta, 0, eps));
    rec.expect("besov interior, p_S = 1 / optimal s_R", rough.penaltySpace.s + rough.epsilonTilde,
               -eta + Rational(2, 9));
    rec.expect("besov interior, p_S = 1 / optimal sigma", rough.sigma + rough.epsilonTilde,
               -eta + Rational(1, 18));
  });

  rec.guard("tighter source", [&] {
    const Rational smallEps(1, 1000000);
    const auto cmp = compareSources(fixtures::looseSourceProblem(eta, smallEps),
                                    fixtures::tighterSource(eta, smallEps));
    rec.expect("tighter source / direct sigma, loose", cmp.directLoose.sigma, 0);
    rec.expect("tighter source / direct sigma, tight", cmp.directTight.sigma,
               -eta / 3 + smallEps);
    rec.expect("tighter source / direct s_R, tight", cmp.directTight.penaltySpace.s,
               -eta / 3 + smallEps + Rational(1, 6));
    rec.expectTrue("tighter source / optimal delta positive", cmp.optimalDelta > 0,
                   "delta " + formatRational(cmp.optimalDelta));
    rec.expect("tighter source / optimal delta matches closed form",
               cmp.optimalDeltaEpsilonFree, cmp.closedFormDelta);
    rec.expect("tighter source / closed form", cmp.closedFormDelta, 3 * smallEps / 2);
  });

  return rec.take();
}

}  // namespace besov
