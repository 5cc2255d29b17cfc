#include "besov/besov_space.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace besov {

double levelWeight(const BesovSpace& space, int level) {
  if (!(space.p > 0.0)) {
    throw ValidationError("levelWeight requires p > 0");
  }
  return std::exp2(space.p * weightExponent(space) * level);
}

std::string describe(const BesovSpace& space) {
  std::ostringstream out;
  out << "B^{" << formatDouble(space.s) << "}_{" << formatDouble(space.p) << "} (d=" << space.d
      << ")";
  return out.str();
}

Rational parseRational(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw ValidationError("empty rational literal");
  }
  std::string trimmed = text.substr(first, last - first + 1);
  const bool negative = !trimmed.empty() && trimmed.front() == '-';
  std::string body = negative || trimmed.front() == '+' ? trimmed.substr(1) : trimmed;
  auto isDigits = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };

  Rational value;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!isDigits(num) || !isDigits(den)) {
      throw ValidationError("malformed rational literal '" + text + "'");
    }
    const boost::multiprecision::cpp_int denominator(den);
    if (denominator == 0) {
      throw ValidationError("zero denominator in '" + text + "'");
    }
    value = Rational(boost::multiprecision::cpp_int(num), denominator);
  } else {
    // decimal literal with optional fraction and exponent: 12, 0.001, 1e-6, 2.5E3
    std::string mantissa = body;
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string::npos) {
      mantissa = body.substr(0, e);
      std::string expText = body.substr(e + 1);
      const bool expNegative = !expText.empty() && expText.front() == '-';
      if (!expText.empty() && (expText.front() == '-' || expText.front() == '+')) {
        expText = expText.substr(1);
      }
      if (!isDigits(expText) || expText.size() > 4) {
        throw ValidationError("malformed exponent in '" + text + "'");
      }
      exponent = std::stol(expText) * (expNegative ? -1 : 1);
    }
    std::string whole = mantissa;
    std::string frac;
    if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
      whole = mantissa.substr(0, dot);
      frac = mantissa.substr(dot + 1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !isDigits(whole)) ||
        (!frac.empty() && !isDigits(frac))) {
      throw ValidationError("malformed number literal '" + text + "'");
    }
    exponent -= static_cast<long>(frac.size());
    boost::multiprecision::cpp_int scale = 1;
    for (long i = 0; i < std::labs(exponent); ++i) scale *= 10;
    const boost::multiprecision::cpp_int digits((whole.empty() ? "0" : whole) + frac);
    value = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  }
  return negative ? Rational(-value) : value;
}

std::string formatRational(const Rational& x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

std::string formatDouble(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, result.ptr);
}

}  // namespace besov
