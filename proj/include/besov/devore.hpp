#pragma once

#include <span>
#include <string>
#include <vector>

#include "besov/besov_space.hpp"

namespace besov {

struct LabeledSpace {
  std::string label;
  BesovSpace space;
};

/// The line s = d/p + level in the (1/p, s) plane: all spaces of one differential dimension.
struct DiagramLine {
  std::string label;
  double level = 0.0;
};

struct DiagramRow {
  std::string label;
  double invP = 0.0;
  double s = 0.0;
};

/**
 * Rows for a DeVore diagram (smoothness against 1/p).
 *
 * One row per point, followed by one row per (line, sample) pair where each
 * line is evaluated at the given 1/p samples. All points must have dimension d.
 */
std::vector<DiagramRow> devoreDiagramData(std::span<const LabeledSpace> points,
                                          std::span<const DiagramLine> lines,
                                          std::span<const double> invPSamples, int d = 1);

/// CSV with header label,inv_p,s
std::string devoreCsv(std::span<const DiagramRow> rows);

}  // namespace besov
