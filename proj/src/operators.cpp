#include "besov/operators.hpp"

#include <cmath>
#include <string>

#include "besov/errors.hpp"

namespace besov {

DiagonalScaleOperator::DiagonalScaleOperator(double eta, int maxLevel, Execution exec)
    : eta_(eta), maxLevel_(maxLevel), exec_(exec) {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw ValidationError("smoothing order eta must be finite and >= 0");
  }
  CoefField probe(maxLevel);  // validates the level range
  multipliers_.resize(static_cast<std::size_t>(maxLevel) + 1);
  for (int j = 0; j <= maxLevel; ++j) {
    multipliers_[static_cast<std::size_t>(j)] = std::exp2(-eta * j);
  }
}

double DiagonalScaleOperator::multiplier(int level) const {
  if (level < 0 || level > maxLevel_) {
    throw ValidationError("operator level " + std::to_string(level) + " outside [0, " +
                          std::to_string(maxLevel_) + "]");
  }
  return multipliers_[static_cast<std::size_t>(level)];
}

CoefField DiagonalScaleOperator::apply(const CoefField& u) const {
  if (u.maxLevel() > maxLevel_) {
    throw ValidationError("field level " + std::to_string(u.maxLevel()) +
                          " exceeds operator maxLevel " + std::to_string(maxLevel_));
  }
  CoefField out(u.maxLevel());
  const std::span<const double> factors(multipliers_.data(),
                                        static_cast<std::size_t>(u.maxLevel()) + 1);
  kernels::scaleByLevel(u.values(), factors, out.values(), exec_);
  return out;
}

CoefField DiagonalScaleOperator::applyAdjoint(const CoefField& v) const { return apply(v); }

MatrixOperator::MatrixOperator(int maxLevel, std::vector<double> rowMajor)
    : maxLevel_(maxLevel), n_(CoefField::flatSize(maxLevel)), a_(std::move(rowMajor)) {
  if (a_.size() != n_ * n_) {
    throw ValidationError("matrix operator needs " + std::to_string(n_ * n_) + " entries");
  }
  double sum = 0.0;
  for (double x : a_) {
    if (!std::isfinite(x)) throw ValidationError("matrix operator entries must be finite");
    sum += x * x;
  }
  frobenius_ = std::sqrt(sum);
}

CoefField MatrixOperator::apply(const CoefField& u) const {
  const CoefField x = u.padded(maxLevel_);
  CoefField out(maxLevel_);
  for (std::size_t r = 0; r < n_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n_; ++c) s += a_[r * n_ + c] * x.values()[c];
    out.values()[r] = s;
  }
  return out;
}

CoefField MatrixOperator::applyAdjoint(const CoefField& v) const {
  const CoefField y = v.padded(maxLevel_);
  CoefField out(maxLevel_);
  for (std::size_t r = 0; r < n_; ++r) {
    const double yr = y.values()[r];
    for (std::size_t c = 0; c < n_; ++c) out.values()[c] += a_[r * n_ + c] * yr;
  }
  return out;
}

}  // namespace besov
