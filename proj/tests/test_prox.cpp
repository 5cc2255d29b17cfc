#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "besov/errors.hpp"
#include "besov/prox.hpp"
#include "oracles.hpp"

TEST(ScalarProx, QuadraticClosedForm) {
  EXPECT_DOUBLE_EQ(besov::scalarProx(2.0, 3.0, 0.5, 2.0, 2.0), 6.0 / 5.0);
  EXPECT_DOUBLE_EQ(besov::scalarProx(1.0, -1.0, 1.0, 1.0, 2.0), -0.5);
}

TEST(ScalarProx, SoftThreshold) {
  // |m y| = 1 <= alpha w / 2 = 1: zero
  EXPECT_EQ(besov::scalarProx(1.0, 1.0, 2.0, 1.0, 1.0), 0.0);
  // t = (|my| - alpha w / 2) / m^2 = (6 - 1) / 4
  EXPECT_DOUBLE_EQ(besov::scalarProx(2.0, 3.0, 1.0, 2.0, 1.0), 1.25);
  EXPECT_DOUBLE_EQ(besov::scalarProx(2.0, -3.0, 1.0, 2.0, 1.0), -1.25);
  EXPECT_DOUBLE_EQ(besov::scalarProx(-2.0, 3.0, 1.0, 2.0, 1.0), -1.25);
}

TEST(ScalarProx, ZeroMultiplierOrData) {
  EXPECT_EQ(besov::scalarProx(0.0, 3.0, 1.0, 1.0, 1.5), 0.0);
  EXPECT_EQ(besov::scalarProx(1.0, 0.0, 1.0, 1.0, 1.5), 0.0);
}

TEST(ScalarProx, StationarityForPowerBetweenOneAndTwo) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> q(1.01, 1.99), m(0.01, 3), y(-10, 10), logA(-6, 2),
      logW(-4, 4);
  for (int i = 0; i < 2000; ++i) {
    const double qq = q(rng), mm = m(rng), yy = y(rng);
    const double a = std::pow(10.0, logA(rng)), w = std::pow(10.0, logW(rng));
    const double t = besov::scalarProx(mm, yy, a, w, qq);
    EXPECT_LE(besov::scalarStationarityResidual(mm, yy, a, w, qq, t), 1e-10)
        << qq << " " << mm << " " << yy << " " << a << " " << w;
    EXPECT_TRUE(t == 0.0 || std::signbit(t) == std::signbit(mm * yy));
  }
}

TEST(ScalarProx, MatchesGridOracle) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> q(1, 2), m(0.1, 2), y(-3, 3), a(0.01, 2), w(0.1, 4);
  for (int i = 0; i < 200; ++i) {
    const double qq = i % 10 == 0 ? 1.0 : (i % 10 == 1 ? 2.0 : q(rng));
    const double mm = m(rng), yy = y(rng), aa = a(rng), ww = w(rng);
    const double t = besov::scalarProx(mm, yy, aa, ww, qq);
    EXPECT_NEAR(t, oracle::scalarProxOracle(mm, yy, aa, ww, qq), 1e-5);
  }
}

TEST(ScalarProx, ObjectiveNotAboveNeighbours) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> q(1, 2), y(-5, 5);
  for (int i = 0; i < 500; ++i) {
    const double qq = q(rng), yy = y(rng);
    const double t = besov::scalarProx(0.7, yy, 0.3, 1.1, qq);
    const double f = besov::scalarObjective(0.7, yy, 0.3, 1.1, qq, t);
    for (double h : {1e-3, -1e-3, 1e-6, -1e-6}) {
      EXPECT_LE(f, besov::scalarObjective(0.7, yy, 0.3, 1.1, qq, t + h) + 1e-14);
    }
  }
}

TEST(ScalarProx, TinyAndHugeScales) {
  for (double y : {1e-300, 1e-12, 1e12}) {
    const double t = besov::scalarProx(1.0, y, 1e-3, 1.0, 1.5);
    EXPECT_TRUE(std::isfinite(t));
    EXPECT_LE(besov::scalarStationarityResidual(1.0, y, 1e-3, 1.0, 1.5, t), 1e-10);
  }
}

TEST(ScalarProx, RejectsInvalidArguments) {
  EXPECT_THROW(besov::scalarProx(1, 1, 0, 1, 1.5), besov::ValidationError);
  EXPECT_THROW(besov::scalarProx(1, 1, 1, -1, 1.5), besov::ValidationError);
  EXPECT_THROW(besov::scalarProx(1, 1, 1, 1, 2.5), besov::ValidationError);
  EXPECT_THROW(besov::scalarProx(1, 1, 1, 1, 0.5), besov::ValidationError);
  EXPECT_THROW(besov::scalarProx(1, NAN, 1, 1, 1.5), besov::ValidationError);
}
