#pragma once

#include <cmath>
#include <string>

#include "besov/errors.hpp"
#include "besov/numeric.hpp"

namespace besov {

/**
 * A point (s, p, d) of the Besov scale B^s_{p,p} on a d-dimensional domain.
 *
 * The second integrability index is always identified with p. Num is double
 * for numerical work and Rational for the exact parameter calculus.
 */
template <class Num>
struct BasicBesovSpace {
  Num s{0};  ///< smoothness
  Num p{2};  ///< integrability index, p > 0
  int d = 1; ///< ambient dimension, d >= 1

  friend bool operator==(const BasicBesovSpace&, const BasicBesovSpace&) = default;
};

using BesovSpace = BasicBesovSpace<double>;
using ExactBesovSpace = BasicBesovSpace<Rational>;

template <class Num>
void validate(const BasicBesovSpace<Num>& space) {
  if (!isFinite(space.s) || !isFinite(space.p)) {
    throw ValidationError("Besov space parameters must be finite");
  }
  if (!(space.p > Num(0))) {
    throw ValidationError("Besov space requires p > 0");
  }
  if (space.d < 1) {
    throw ValidationError("Besov space requires d >= 1");
  }
}

/// s - d/p
template <class Num>
Num differentialDimension(const BasicBesovSpace<Num>& space) {
  return space.s - Num(space.d) / space.p;
}

/// Parameters coincide up to the comparison tolerance.
template <class Num>
bool sameParameters(const BasicBesovSpace<Num>& a, const BasicBesovSpace<Num>& b) {
  return a.d == b.d && approxEqual(a.s, b.s) && approxEqual(a.p, b.p);
}

/**
 * Sufficient embedding criterion: ddim(a) > ddim(b) strictly and a.p <= b.p.
 *
 * This is a criterion check, not an inclusion oracle: it returns false for
 * a == b although the inclusion trivially holds.
 */
template <class Num>
bool embeds(const BasicBesovSpace<Num>& a, const BasicBesovSpace<Num>& b) {
  if (a.d != b.d) {
    throw ValidationError("embeds: dimension mismatch (" + std::to_string(a.d) + " vs " +
                          std::to_string(b.d) + ")");
  }
  if (a.p < Num(1) || b.p < Num(1)) {
    throw ValidationError("embeds: criterion requires p >= 1 for both spaces");
  }
  return strictlyGreater(differentialDimension(a), differentialDimension(b)) &&
         lessOrEqual(a.p, b.p);
}

/// embeds(a, b) or identical parameters.
template <class Num>
bool embedsOrEqual(const BasicBesovSpace<Num>& a, const BasicBesovSpace<Num>& b) {
  return sameParameters(a, b) || embeds(a, b);
}

/// Hoelder conjugate p/(p-1).
template <class Num>
Num conjugateExponent(const Num& p) {
  if (!(p > Num(1))) {
    throw ValidationError("conjugate exponent requires p > 1");
  }
  return p / (p - Num(1));
}

/// (B^s_p)* = B^{-s}_{p*}
template <class Num>
BasicBesovSpace<Num> dualSpace(const BasicBesovSpace<Num>& space) {
  validate(space);
  if (!(space.p > Num(1))) {
    throw ValidationError("dualSpace requires p > 1");
  }
  return {-space.s, conjugateExponent(space.p), space.d};
}

template <class Num>
BesovSpace toDouble(const BasicBesovSpace<Num>& space) {
  return {toDouble(space.s), toDouble(space.p), space.d};
}

/// Exponent s + d(1/2 - 1/p) shared by the sequence norm weights.
inline double weightExponent(const BesovSpace& space) {
  return space.s + space.d * (0.5 - 1.0 / space.p);
}

/// 2^{p (s + d(1/2 - 1/p)) j}: the weight multiplying |u_lambda|^p at level j.
double levelWeight(const BesovSpace& space, int level);

/// The Sobolev space H^sigma = B^sigma_{2,2}.
inline BesovSpace sobolevSpace(double sigma, int d = 1) { return {sigma, 2.0, d}; }

std::string describe(const BesovSpace& space);

}  // namespace besov
