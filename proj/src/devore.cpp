#include "besov/devore.hpp"

#include <sstream>

#include "besov/io.hpp"

namespace besov {

std::vector<DiagramRow> devoreDiagramData(std::span<const LabeledSpace> points,
                                          std::span<const DiagramLine> lines,
                                          std::span<const double> invPSamples, int d) {
  if (d < 1) {
    throw ValidationError("DeVore diagram requires d >= 1");
  }
  std::vector<DiagramRow> rows;
  rows.reserve(points.size() + lines.size() * invPSamples.size());
  for (const LabeledSpace& point : points) {
    validate(point.space);
    if (point.space.d != d) {
      throw ValidationError("DeVore diagram: space '" + point.label + "' has d = " +
                            std::to_string(point.space.d) + ", expected " + std::to_string(d));
    }
    rows.push_back({point.label, 1.0 / point.space.p, point.space.s});
  }
  for (const DiagramLine& line : lines) {
    for (double invP : invPSamples) {
      rows.push_back({line.label, invP, d * invP + line.level});
    }
  }
  return rows;
}

std::string devoreCsv(std::span<const DiagramRow> rows) {
  std::ostringstream out;
  out << "label,inv_p,s\n";
  for (const DiagramRow& row : rows) {
    out << csvField(row.label) << ',' << formatDouble(row.invP) << ',' << formatDouble(row.s)
        << '\n';
  }
  return out.str();
}

}  // namespace besov
