#pragma once

#include <span>
#include <vector>

#include "besov/besov_space.hpp"
#include "besov/coef_field.hpp"
#include "besov/kernels.hpp"

namespace besov {

// Sequence-model norms. The wavelet norm equivalence is taken with constants
// c = C = 1, so these are the norms themselves.

/// (sum_lambda levelWeight(space, |lambda|) |u_lambda|^p)^{1/p}
double besovNorm(const CoefField& u, const BesovSpace& space,
                 Execution exec = Execution::parallel);

/// besovNorm(u, H^sigma)
double sobolevNorm(const CoefField& u, double sigma, Execution exec = Execution::parallel);

/// Per-level terms levelWeight(space, j) * sum_k |u_{j,k}|^p.
std::vector<double> levelContributions(const CoefField& u, const BesovSpace& space,
                                       Execution exec = Execution::parallel);

/// Geometric decay fit of per-level contributions c_j (log2 c_j ~ slope * j).
struct DecayReport {
  double slope = 0.0;  ///< fitted log2 slope per level
  double rate = 0.0;   ///< 2^slope
  bool finite = true;
  bool decaying = true;
};

/**
 * Least-squares fit of log2 c_j against j over the levels with c_j > 0.
 *
 * decaying holds when every contribution is finite and the fitted slope is
 * negative. All-zero input counts as decaying. A single positive level has
 * no slope and counts as decaying.
 */
DecayReport analyzeDecay(std::span<const double> contributions);

}  // namespace besov
