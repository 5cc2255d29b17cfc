#pragma once

#include <cmath>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace besov {

/// Exact rational arithmetic for the parameter calculus.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <class Num>
inline constexpr bool is_exact_v = std::is_same_v<Num, Rational>;

/// Absolute tolerance for equality and strictness in floating point; zero for rationals.
inline constexpr double kCompareTolerance = 1e-12;

template <class Num>
Num compareTolerance() {
  if constexpr (is_exact_v<Num>) {
    return Num(0);
  } else {
    return Num(kCompareTolerance);
  }
}

template <class Num>
bool approxEqual(const Num& a, const Num& b) {
  const Num diff = a > b ? a - b : b - a;
  return diff <= compareTolerance<Num>();
}

/// a > b by more than the tolerance.
template <class Num>
bool strictlyGreater(const Num& a, const Num& b) {
  return a - b > compareTolerance<Num>();
}

/// a <= b up to the tolerance.
template <class Num>
bool lessOrEqual(const Num& a, const Num& b) {
  return a - b <= compareTolerance<Num>();
}

template <class Num>
double toDouble(const Num& x) {
  if constexpr (is_exact_v<Num>) {
    return x.template convert_to<double>();
  } else {
    return static_cast<double>(x);
  }
}

template <class Num>
bool isFinite(const Num& x) {
  if constexpr (is_exact_v<Num>) {
    return true;
  } else {
    return std::isfinite(x);
  }
}

/// Parses "a/b", "a" or a decimal literal ("0.001" -> 1/1000) into an exact rational.
Rational parseRational(const std::string& text);

/// "p/q" or "p" for integers.
std::string formatRational(const Rational& x);

/// Shortest round-trip decimal representation.
std::string formatDouble(double x);

}  // namespace besov
