#pragma once

#include <vector>

#include "besov/coef_field.hpp"
#include "besov/kernels.hpp"

namespace besov {

/// Bounded linear operator on coefficient fields, with adjoint under the plain inner product.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;

  virtual CoefField apply(const CoefField& u) const = 0;
  virtual CoefField applyAdjoint(const CoefField& v) const = 0;
  /// Upper bound L >= ||F|| in the coefficient l2 norm.
  virtual double normBound() const = 0;
  virtual int maxLevel() const = 0;
};

/**
 * Per-level multiplier mu_j = 2^{-eta j}: smoothing of order eta in the
 * sequence model. Self-adjoint; apply and applyAdjoint coincide.
 */
class DiagonalScaleOperator final : public LinearOperator {
 public:
  DiagonalScaleOperator(double eta, int maxLevel, Execution exec = Execution::parallel);

  double eta() const { return eta_; }
  int maxLevel() const override { return maxLevel_; }
  double multiplier(int level) const;
  const std::vector<double>& multipliers() const { return multipliers_; }

  CoefField apply(const CoefField& u) const override;
  CoefField applyAdjoint(const CoefField& v) const override;
  /// mu_0 = 1 for eta >= 0.
  double normBound() const override { return 1.0; }

 private:
  double eta_;
  int maxLevel_;
  Execution exec_;
  std::vector<double> multipliers_;
};

/// Dense operator on the flat coefficient vector; useful for non-diagonal test problems.
class MatrixOperator final : public LinearOperator {
 public:
  /// Row-major square matrix of dimension CoefField::flatSize(maxLevel).
  MatrixOperator(int maxLevel, std::vector<double> rowMajor);

  int maxLevel() const override { return maxLevel_; }
  CoefField apply(const CoefField& u) const override;
  CoefField applyAdjoint(const CoefField& v) const override;
  /// Frobenius norm, an upper bound of the spectral norm.
  double normBound() const override { return frobenius_; }

 private:
  int maxLevel_;
  std::size_t n_;
  std::vector<double> a_;
  double frobenius_ = 0.0;
};

}  // namespace besov
