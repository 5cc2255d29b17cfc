#include "besov/coef_field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "besov/errors.hpp"

namespace besov {

namespace {

void checkMaxLevel(int maxLevel) {
  if (maxLevel < 0 || maxLevel > CoefField::kMaxSupportedLevel) {
    throw ValidationError("coefficient field maxLevel must lie in [0, " +
                          std::to_string(CoefField::kMaxSupportedLevel) + "], got " +
                          std::to_string(maxLevel));
  }
}

}  // namespace

CoefField::CoefField(int maxLevel) : maxLevel_(maxLevel) {
  checkMaxLevel(maxLevel);
  values_.assign(flatSize(maxLevel), 0.0);
}

CoefField::CoefField(int maxLevel, std::vector<double> values)
    : maxLevel_(maxLevel), values_(std::move(values)) {
  checkMaxLevel(maxLevel);
  if (values_.size() != flatSize(maxLevel)) {
    throw ValidationError("coefficient vector has " + std::to_string(values_.size()) +
                          " entries, expected " + std::to_string(flatSize(maxLevel)));
  }
  if (!allFinite()) {
    throw ValidationError("coefficient field contains non-finite values");
  }
}

int CoefField::levelOf(std::size_t flat) {
  return static_cast<int>(std::bit_width(flat + 1)) - 1;
}

bool CoefField::contains(DyadicIndex index) const {
  return index.level >= 0 && index.level <= maxLevel_ && index.position >= 0 &&
         static_cast<std::size_t>(index.position) < levelSize(index.level);
}

double CoefField::at(DyadicIndex index) const {
  if (index.level > maxLevel_ && index.level >= 0 && index.position >= 0 &&
      index.level <= 62 && static_cast<std::uint64_t>(index.position) < (std::uint64_t{1} << index.level)) {
    return 0.0;  // valid index above the truncation level
  }
  if (!contains(index)) {
    throw ValidationError("dyadic index (" + std::to_string(index.level) + ", " +
                          std::to_string(index.position) + ") out of range");
  }
  return values_[levelOffset(index.level) + static_cast<std::size_t>(index.position)];
}

void CoefField::set(DyadicIndex index, double value) {
  if (!contains(index)) {
    throw ValidationError("dyadic index (" + std::to_string(index.level) + ", " +
                          std::to_string(index.position) + ") outside field of maxLevel " +
                          std::to_string(maxLevel_));
  }
  if (!std::isfinite(value)) {
    throw ValidationError("coefficient values must be finite");
  }
  values_[levelOffset(index.level) + static_cast<std::size_t>(index.position)] = value;
}

void CoefField::checkLevel(int j) const {
  if (j < 0 || j > maxLevel_) {
    throw ValidationError("level " + std::to_string(j) + " outside [0, " +
                          std::to_string(maxLevel_) + "]");
  }
}

std::span<const double> CoefField::level(int j) const {
  checkLevel(j);
  return std::span<const double>(values_).subspan(levelOffset(j), levelSize(j));
}

std::span<double> CoefField::level(int j) {
  checkLevel(j);
  return std::span<double>(values_).subspan(levelOffset(j), levelSize(j));
}

CoefField CoefField::padded(int maxLevel) const {
  if (maxLevel < maxLevel_) {
    throw ValidationError("padded: cannot truncate a field from level " +
                          std::to_string(maxLevel_) + " to " + std::to_string(maxLevel));
  }
  CoefField out(maxLevel);
  std::copy(values_.begin(), values_.end(), out.values_.begin());
  return out;
}

bool CoefField::allFinite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

CoefField& CoefField::operator+=(const CoefField& other) {
  if (other.maxLevel_ > maxLevel_) {
    *this = padded(other.maxLevel_);
  }
  for (std::size_t i = 0; i < other.values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

CoefField& CoefField::operator-=(const CoefField& other) {
  if (other.maxLevel_ > maxLevel_) {
    *this = padded(other.maxLevel_);
  }
  for (std::size_t i = 0; i < other.values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

CoefField& CoefField::operator*=(double factor) {
  for (double& v : values_) v *= factor;
  return *this;
}

double dot(const CoefField& a, const CoefField& b) {
  const std::size_t n = std::min(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a.values()[i] * b.values()[i];
  return sum;
}

}  // namespace besov
