#include "besov/prox.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

#include "besov/errors.hpp"

namespace besov {

void validateScalarProxArguments(double m, double y, double alpha, double w, double q) {
  if (!std::isfinite(m) || !std::isfinite(y)) {
    throw ValidationError("scalarProx: m and y must be finite");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("scalarProx: alpha must be positive and finite");
  }
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw ValidationError("scalarProx: weight must be positive and finite");
  }
  if (!(q >= 1.0 && q <= 2.0)) {
    throw ValidationError("scalarProx: power q must lie in [1, 2]");
  }
}

namespace detail {

double scalarProxUnchecked(double m, double y, double alpha, double w, double q) noexcept {
  const double b = m * y;
  if (m == 0.0 || b == 0.0) {
    return 0.0;
  }
  const double c = alpha * w;
  const double m2 = m * m;
  const double sign = b > 0.0 ? 1.0 : -1.0;
  const double absB = std::fabs(b);

  if (q == 2.0) {
    return b / (m2 + c);
  }
  if (q == 1.0) {
    return absB <= 0.5 * c ? 0.0 : sign * (absB - 0.5 * c) / m2;
  }

  // g(z) = 2 m^2 z - 2|b| + c q z^{q-1}, increasing and concave on z > 0.
  // The root lies below both |b|/m^2 and the penalty-only balance point.
  const double penaltyBalance = std::pow(2.0 * absB / (c * q), 1.0 / (q - 1.0));
  double hi = std::fmin(absB / m2, penaltyBalance);
  double lo = 0.0;
  if (!(hi > 0.0)) {
    return 0.0;
  }
  auto g = [&](double z) { return 2.0 * m2 * z - 2.0 * absB + c * q * std::pow(z, q - 1.0); };
  double z = hi;
  for (int iter = 0; iter < 400; ++iter) {
    const double gz = g(z);
    if (gz == 0.0) break;
    if (gz > 0.0) {
      hi = z;
    } else {
      lo = z;
    }
    const double slope = 2.0 * m2 + c * q * (q - 1.0) * std::pow(z, q - 2.0);
    double next = z - gz / slope;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::fabs(next - z) <= 1e-15 * next || hi - lo <= 4.0 * DBL_EPSILON * hi) {
      z = next;
      break;
    }
    z = next;
  }
  return sign * z;
}

}  // namespace detail

double scalarProx(double m, double y, double alpha, double w, double q) {
  validateScalarProxArguments(m, y, alpha, w, q);
  return detail::scalarProxUnchecked(m, y, alpha, w, q);
}

double scalarObjective(double m, double y, double alpha, double w, double q, double t) {
  const double r = m * t - y;
  return r * r + alpha * w * std::pow(std::fabs(t), q);
}

double scalarStationarityResidual(double m, double y, double alpha, double w, double q, double t) {
  const double b = m * y;
  const double c = alpha * w;
  const double scale = std::fmax(2.0 * std::fabs(b), DBL_MIN);
  if (t == 0.0) {
    if (q == 1.0) {
      return std::fmax(0.0, 2.0 * std::fabs(b) - c) / scale;
    }
    // the minimizer lies below (2|b|/(c q))^{1/(q-1)}; when that underflows, 0 is exact
    const double bound = std::pow(2.0 * std::fabs(b) / (c * q), 1.0 / (q - 1.0));
    if (bound < std::numeric_limits<double>::denorm_min()) return 0.0;
    return 2.0 * std::fabs(b) / scale;
  }
  const double sign = t > 0.0 ? 1.0 : -1.0;
  const double penaltyDerivative =
      q == 1.0 ? c * sign : c * q * sign * std::pow(std::fabs(t), q - 1.0);
  return std::fabs(2.0 * m * (m * t - y) + penaltyDerivative) / scale;
}

}  // namespace besov
