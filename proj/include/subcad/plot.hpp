#pragma once

#include "subcad/driver.hpp"

#include <optional>
#include <string>

namespace subcad {

struct PlotOptions {
  /// Viewport; fitted to the sample points when absent.
  std::optional<double> xmin, xmax, ymin, ymax;
  int width = 600;
  int height = 600;
  /// Curve resolution: columns and rows solved exactly.
  int resolution = 300;
};

/// SVG of a two-variable decomposition: the zero sets of the input
/// polynomials, dotted lines over the sections of the real line, and one
/// marker per cell at its sample. Squares are cells of dimension 2,
/// diamonds dimension 1, circles points; sections are filled, sectors
/// hollow; cells where the formula holds are green.
std::string plot2d_svg(const Problem& problem, const Outcome& out, const PlotOptions& opts = {});

}  // namespace subcad
