#include "besov/planner.hpp"

#include <sstream>

namespace besov {

std::string toString(PlanRule rule) {
  switch (rule) {
    case PlanRule::direct:
      return "direct";
    case PlanRule::weakened:
      return "weakened";
    case PlanRule::optimal:
      return "optimal";
  }
  return "unknown";
}

std::string toString(OptimalCase c) {
  switch (c) {
    case OptimalCase::notApplicable:
      return "none";
    case OptimalCase::adjointAtLeastDomain:
      return "p_G >= p_D";
    case OptimalCase::adjointBelowDomain:
      return "p_G < p_D";
  }
  return "unknown";
}

namespace {

double gridPoint(double lo, double hi, int count, int i) {
  return count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
}

}  // namespace

std::vector<BesovSpace> feasibleWeakenedSources(const ProblemSignature& sig,
                                                const SourceGrid& grid) {
  requireValidSignature(sig);
  if (grid.invPCount < 0 || grid.sCount < 0) {
    throw ValidationError("source grid counts must be nonnegative");
  }
  std::vector<BesovSpace> out;
  for (int a = 0; a < grid.invPCount; ++a) {
    const double invP = gridPoint(grid.invPMin, grid.invPMax, grid.invPCount, a);
    if (!(invP > 0.0)) continue;  // p = infinity is outside the reflexive range
    for (int b = 0; b < grid.sCount; ++b) {
      const BesovSpace candidate{gridPoint(grid.sMin, grid.sMax, grid.sCount, b), 1.0 / invP,
                                 sig.dimension()};
      if (isWeakenedSource(sig, candidate)) out.push_back(candidate);
    }
  }
  return out;
}

std::string weakenedSourcesCsv(const std::vector<BesovSpace>& spaces) {
  std::ostringstream out;
  out << "p,inv_p,s,ddim\n";
  for (const BesovSpace& b : spaces) {
    out << formatDouble(b.p) << ',' << formatDouble(1.0 / b.p) << ',' << formatDouble(b.s) << ','
        << formatDouble(differentialDimension(b)) << '\n';
  }
  return out.str();
}

}  // namespace besov
