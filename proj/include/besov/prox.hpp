#pragma once

namespace besov {

/**
 * Global minimizer of phi(t) = (m t - y)^2 + alpha w |t|^q for 1 <= q <= 2.
 *
 * q = 2 and q = 1 are closed form (linear shrinkage, soft threshold). For
 * 1 < q < 2 the stationarity equation 2m(mt - y) + alpha w q sign(t)|t|^{q-1} = 0
 * is solved by Newton's method safeguarded by bisection on the bracket
 * sign(my) t in [0, |y/m|]. m = 0 gives t = 0.
 */
double scalarProx(double m, double y, double alpha, double w, double q);

/// phi(t) for the scalar problem above.
double scalarObjective(double m, double y, double alpha, double w, double q, double t);

/**
 * Scaled optimality residual of t for the scalar problem.
 *
 * For t != 0 this is |phi'(t)| / max(2|my|, tiny); at t = 0 it measures how far
 * 0 is from satisfying the subgradient condition |2my| <= alpha w [q = 1].
 */
double scalarStationarityResidual(double m, double y, double alpha, double w, double q, double t);

/// Throws ValidationError for alpha <= 0, w <= 0, q outside [1, 2], or non-finite input.
void validateScalarProxArguments(double m, double y, double alpha, double w, double q);

namespace detail {
/// scalarProx without argument validation; safe inside parallel regions.
double scalarProxUnchecked(double m, double y, double alpha, double w, double q) noexcept;
}  // namespace detail

}  // namespace besov
