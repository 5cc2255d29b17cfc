#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace besov {

/// Wavelet index lambda = (j, k) for one-dimensional fields: 0 <= k < 2^j.
struct DyadicIndex {
  int level = 0;
  std::int64_t position = 0;

  friend auto operator<=>(const DyadicIndex&, const DyadicIndex&) = default;
};

/**
 * Finite dyadic wavelet-coefficient field u_lambda on levels 0..maxLevel.
 *
 * Storage is dense and level-major: level j occupies the flat range
 * [2^j - 1, 2^{j+1} - 1). Indices never written hold zero, which is the
 * "finitely supported" convention of the sequence model. Fields are
 * one-dimensional (2^j positions per level).
 */
class CoefField {
 public:
  static constexpr int kMaxSupportedLevel = 24;

  CoefField() : CoefField(0) {}
  explicit CoefField(int maxLevel);
  CoefField(int maxLevel, std::vector<double> values);

  int maxLevel() const { return maxLevel_; }
  std::size_t size() const { return values_.size(); }

  static std::size_t levelOffset(int level) { return (std::size_t{1} << level) - 1; }
  static std::size_t levelSize(int level) { return std::size_t{1} << level; }
  static std::size_t flatSize(int maxLevel) { return (std::size_t{1} << (maxLevel + 1)) - 1; }
  /// Level of a flat storage position.
  static int levelOf(std::size_t flat);

  bool contains(DyadicIndex index) const;
  double at(DyadicIndex index) const;
  /// Rejects out-of-range indices and non-finite values.
  void set(DyadicIndex index, double value);

  std::span<const double> level(int j) const;
  std::span<double> level(int j);
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  /// Copy extended with zeros (or identical) up to maxLevel >= this->maxLevel().
  CoefField padded(int maxLevel) const;
  bool allFinite() const;

  CoefField& operator+=(const CoefField& other);
  CoefField& operator-=(const CoefField& other);
  CoefField& operator*=(double factor);

  friend CoefField operator+(CoefField a, const CoefField& b) { return a += b; }
  friend CoefField operator-(CoefField a, const CoefField& b) { return a -= b; }
  friend CoefField operator*(double c, CoefField a) { return a *= c; }
  friend bool operator==(const CoefField&, const CoefField&) = default;

 private:
  void checkLevel(int j) const;

  int maxLevel_;
  std::vector<double> values_;
};

/// Plain coefficient inner product sum_lambda a_lambda b_lambda (fields zero-padded).
double dot(const CoefField& a, const CoefField& b);

}  // namespace besov
