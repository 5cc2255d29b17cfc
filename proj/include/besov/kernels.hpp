#pragma once

#include <span>
#include <vector>

namespace besov {

/// Execution policy for the data-parallel kernels.
enum class Execution { serial, parallel };

namespace kernels {

// All kernels operate on level-major flat storage (see CoefField). Per-level
// arrays (factors, weights) have maxLevel + 1 entries.
//
// The serial namespace is the reference implementation; parallel mirrors it
// with OpenMP. Coefficient-wise kernels are bitwise identical between the
// two. Reductions use a fixed chunk decomposition so the parallel result does
// not depend on the thread count; it may differ from the serial sum by
// reassociation only.

namespace serial {
std::vector<double> levelPowerSums(std::span<const double> flat, int maxLevel, double p);
void scaleByLevel(std::span<const double> in, std::span<const double> levelFactors,
                  std::span<double> out);
void proxByLevel(std::span<const double> data, std::span<const double> multipliers,
                 std::span<const double> weights, double alpha, double q, std::span<double> out);
void powerGradientByLevel(std::span<const double> in, std::span<const double> weights, double q,
                          std::span<double> out);
}  // namespace serial

namespace parallel {
std::vector<double> levelPowerSums(std::span<const double> flat, int maxLevel, double p);
void scaleByLevel(std::span<const double> in, std::span<const double> levelFactors,
                  std::span<double> out);
void proxByLevel(std::span<const double> data, std::span<const double> multipliers,
                 std::span<const double> weights, double alpha, double q, std::span<double> out);
void powerGradientByLevel(std::span<const double> in, std::span<const double> weights, double q,
                          std::span<double> out);
}  // namespace parallel

/// sum_k |u_{j,k}|^p for each level j.
std::vector<double> levelPowerSums(std::span<const double> flat, int maxLevel, double p,
                                   Execution exec);
/// out_lambda = factor_{|lambda|} * in_lambda
void scaleByLevel(std::span<const double> in, std::span<const double> levelFactors,
                  std::span<double> out, Execution exec);
/// out_lambda = scalarProx(m_j, data_lambda, alpha, w_j, q)
void proxByLevel(std::span<const double> data, std::span<const double> multipliers,
                 std::span<const double> weights, double alpha, double q, std::span<double> out,
                 Execution exec);
/// out_lambda = q w_j sign(in_lambda) |in_lambda|^{q-1}
void powerGradientByLevel(std::span<const double> in, std::span<const double> weights, double q,
                          std::span<double> out, Execution exec);

}  // namespace kernels
}  // namespace besov
