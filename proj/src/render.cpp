#include "polarix/render.hpp"

#include <cmath>
#include <sstream>

namespace polarix {

namespace {

struct Point {
  double x;
  double y;
};

std::string compact_label(const IsotoneFamily& f, int point_idx) {
  static const char* letters[3] = {"x", "y", "z"};
  std::ostringstream out;
  for (int c = 0; c < 3; ++c)
    for (int j : index_set::elements(f.set(c, point_idx)))
      out << letters[c] << j + 1;
  return out.str();
}

}  // namespace

std::string render_svg(const IsotoneFamily& f) {
  if (f.m() != 3)
    throw std::invalid_argument("render_svg: only three colors are drawable");
  ValidationReport report = validate_family(f);
  if (!report) throw std::invalid_argument("render_svg: " + report.message());

  const int n = f.n();
  const Simplex& s = f.simplex();
  const double unit = 110.0;
  const double margin = 70.0;
  const double height = n * unit * std::sqrt(3.0) / 2.0;
  const double width = n * unit;
  const double total_w = width + 2 * margin;
  const double total_h = height + 2 * margin;

  const Point top{total_w / 2.0, margin};
  const Point left{margin, margin + height};
  const Point right{total_w - margin, margin + height};
  const auto place = [&](const Multidegree& b) {
    const double w1 = static_cast<double>(b[0]) / n;
    const double w2 = static_cast<double>(b[1]) / n;
    const double w3 = static_cast<double>(b[2]) / n;
    return Point{w1 * top.x + w2 * left.x + w3 * right.x,
                 w1 * top.y + w2 * left.y + w3 * right.y};
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w
      << "\" height=\"" << total_h << "\" viewBox=\"0 0 " << total_w << " "
      << total_h << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const SimplexEdge& e : s.edges()) {
    const Point a = place(e.endpoint_low());
    const Point b = place(e.endpoint_high());
    const bool ls = is_ls_edge(f, e);
    svg << "  <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x
        << "\" y2=\"" << b.y << "\" stroke=\"black\" stroke-width=\"1.5\"";
    if (!ls) svg << " stroke-dasharray=\"4 2\"";
    svg << "/>\n";
  }

  for (int p = 0; p < static_cast<int>(s.size()); ++p) {
    const Multidegree& b = s.point(p);
    const Point pos = place(b);
    svg << "  <circle cx=\"" << pos.x << "\" cy=\"" << pos.y
        << "\" r=\"3\" fill=\"black\"/>\n";
    // Nudge boundary labels outward so they stay clear of the edges.
    double dx = 8.0, dy = -8.0;
    if (b[1] == 0 && b[2] == 0) {
      dx = -14.0;
      dy = -12.0;
    } else if (b[0] == 0) {
      dx = -10.0;
      dy = 22.0;
    } else if (b[2] == 0) {
      dx = -58.0;
      dy = -4.0;
    }
    svg << "  <text x=\"" << pos.x + dx << "\" y=\"" << pos.y + dy
        << "\" font-size=\"12pt\" font-family=\"serif\">" << compact_label(f, p)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace polarix
