#include "subcad/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace subcad {

namespace {

struct View {
  double xmin, xmax, ymin, ymax;
  int width, height;
  double px(double x) const { return (x - xmin) / (xmax - xmin) * width; }
  double py(double y) const { return height - (y - ymin) / (ymax - ymin) * height; }
  double clamp_x(double x) const { return std::clamp(x, xmin, xmax); }
  double clamp_y(double y) const { return std::clamp(y, ymin, ymax); }
};

Rational to_rational(double v) {
  Rational q(static_cast<long>(std::llround(v * 1024)), 1024);
  q.canonicalize();
  return q;
}

}  // namespace

std::string plot2d_svg(const Problem& problem, const Outcome& out, const PlotOptions& opts) {
  if (out.run.dimension() != 2) throw std::invalid_argument("plot2d needs two variables");
  double lo_x = -2, hi_x = 2, lo_y = -2, hi_y = 2;
  for (const auto& c : out.cad.cells) {
    const double x = c.sample[0].approx(), y = c.sample[1].approx();
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  }
  const double pad_x = 0.08 * (hi_x - lo_x), pad_y = 0.08 * (hi_y - lo_y);
  const View v{opts.xmin.value_or(lo_x - pad_x), opts.xmax.value_or(hi_x + pad_x),
               opts.ymin.value_or(lo_y - pad_y), opts.ymax.value_or(hi_y + pad_y),
               opts.width, opts.height};

  std::ostringstream svg;
  svg.precision(5);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << v.width << "\" height=\"" << v.height
      << "\" viewBox=\"0 0 " << v.width << ' ' << v.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Dotted verticals over the sections of the real line.
  svg << "<g stroke=\"#888\" stroke-dasharray=\"3,3\">\n";
  for (const auto& r : isolate_roots_of_set(out.run.tiers[0], {})) {
    const double x = r.root.approx();
    if (x < v.xmin || x > v.xmax) continue;
    svg << "<line x1=\"" << v.px(x) << "\" y1=\"0\" x2=\"" << v.px(x) << "\" y2=\"" << v.height << "\"/>\n";
  }
  svg << "</g>\n";

  // Curves, solved exactly along columns and rows.
  svg << "<g fill=\"black\">\n";
  const int steps = std::max(opts.resolution, 10);
  for (const auto& f : problem.polynomials()) {
    for (int i = 0; i <= steps; ++i) {
      const double x = v.xmin + (v.xmax - v.xmin) * i / steps;
      const Polynomial col = f.substitute(0, to_rational(x));
      if (col.is_zero() || !col.involves(1)) continue;
      const SamplePoint base = {Coord(to_rational(x))};
      for (const auto& r : isolate_roots_of_set({f}, base)) {
        const double y = r.root.approx();
        if (y >= v.ymin && y <= v.ymax) svg << "<circle cx=\"" << v.px(x) << "\" cy=\"" << v.py(y) << "\" r=\"0.9\"/>\n";
      }
    }
    for (int j = 0; j <= steps; ++j) {
      const double y = v.ymin + (v.ymax - v.ymin) * j / steps;
      const Polynomial row = f.substitute(1, to_rational(y));
      if (row.is_zero() || !row.involves(0)) continue;
      for (const auto& x : isolate_roots(row)) {
        const double ax = x.approx();
        if (ax >= v.xmin && ax <= v.xmax) {
          svg << "<circle cx=\"" << v.px(ax) << "\" cy=\"" << v.py(y) << "\" r=\"0.9\"/>\n";
        }
      }
    }
  }
  svg << "</g>\n";

  svg << "<g stroke-width=\"1.5\">\n";
  for (size_t i = 0; i < out.cad.cells.size(); ++i) {
    const Cell& c = out.cad.cells[i];
    const double x = v.px(v.clamp_x(c.sample[0].approx()));
    const double y = v.py(v.clamp_y(c.sample[1].approx()));
    const std::string colour = out.truth[i] ? "#1a7f37" : "#333333";
    const std::string fill = c.is_section() ? colour : "white";
    svg << "<g stroke=\"" << colour << "\" fill=\"" << fill << "\"><title>" << c.index_string() << "</title>";
    const double s = 5;
    switch (c.dim()) {
      case 2:
        svg << "<rect x=\"" << x - s << "\" y=\"" << y - s << "\" width=\"" << 2 * s << "\" height=\"" << 2 * s << "\"/>";
        break;
      case 1:
        svg << "<polygon points=\"" << x << ',' << y - s - 1 << ' ' << x + s + 1 << ',' << y << ' ' << x << ','
            << y + s + 1 << ' ' << x - s - 1 << ',' << y << "\"/>";
        break;
      default:
        svg << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << s - 1 << "\"/>";
        break;
    }
    svg << "</g>\n";
  }
  svg << "</g>\n";
  svg << "<text x=\"6\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\">" << out.cad.kind_name() << ": "
      << out.cad.cells.size() << " cells, " << out.true_cells << " true</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace subcad
