#include "forge/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace forge::svg {

namespace {

std::string fmt(double v) {
  // Fixed two-decimal formatting; normalize -0.00 for byte-stable output.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Canvas {
  double min_x = -1, max_x = 1, min_y = -1, max_y = 1;
  double unit = 20.0;
  void include(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  double px(double x) const { return (x - min_x + 1.0) * unit; }
  double py(double y) const { return (max_y + 1.0 - y) * unit; }  // SVG y runs down
  double width() const { return (max_x - min_x + 2.0) * unit; }
  double height() const { return (max_y - min_y + 2.0) * unit; }
};

void open_svg(std::ostringstream& out, const Canvas& c) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(c.width()) << "\" height=\""
      << fmt(c.height()) << "\" viewBox=\"0 0 " << fmt(c.width()) << " " << fmt(c.height())
      << "\">\n";
}

void draw_axes(std::ostringstream& out, const Canvas& c) {
  out << "  <line x1=\"" << fmt(c.px(c.min_x)) << "\" y1=\"" << fmt(c.py(0)) << "\" x2=\""
      << fmt(c.px(c.max_x)) << "\" y2=\"" << fmt(c.py(0))
      << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << fmt(c.px(0)) << "\" y1=\"" << fmt(c.py(c.min_y)) << "\" x2=\""
      << fmt(c.px(0)) << "\" y2=\"" << fmt(c.py(c.max_y))
      << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
}

std::string vec_label(const fanpoly::Vec2& v) {
  // ASCII minus for byte stability.
  return "(" + to_string(v.x) + "," + to_string(v.y) + ")";
}

}  // namespace

std::string render_fan(const fanpoly::AugmentedFan& fan, const RenderOptions& opts) {
  Canvas canvas;
  canvas.unit = opts.unit;
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : fan.rays()) {
    double x = to_double(r.x), y = to_double(r.y);
    pts.push_back({x, y});
    canvas.include(x, y);
  }
  std::ostringstream out;
  open_svg(out, canvas);
  draw_axes(out, canvas);

  // Polygon through the marked points (they are already in ccw order).
  out << "  <polygon points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out << " ";
    out << fmt(canvas.px(pts[i].first)) << "," << fmt(canvas.py(pts[i].second));
  }
  out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

  for (const auto& [x, y] : pts) {
    out << "  <line x1=\"" << fmt(canvas.px(0)) << "\" y1=\"" << fmt(canvas.py(0)) << "\" x2=\""
        << fmt(canvas.px(x)) << "\" y2=\"" << fmt(canvas.py(y))
        << "\" stroke=\"#3366cc\" stroke-width=\"1\"/>\n";
    out << "  <circle cx=\"" << fmt(canvas.px(x)) << "\" cy=\"" << fmt(canvas.py(y))
        << "\" r=\"3.00\" fill=\"#000000\"/>\n";
  }
  if (opts.labels) {
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto& [x, y] = pts[i];
      out << "  <text x=\"" << fmt(canvas.px(x) + 5.0) << "\" y=\"" << fmt(canvas.py(y) - 5.0)
          << "\" font-family=\"monospace\" font-size=\"12\">" << vec_label(fan.ray(static_cast<int>(i)))
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_polytope(const fanpoly::RationalPolytope& poly, const RenderOptions& opts) {
  Canvas canvas;
  canvas.unit = opts.unit;
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : poly.vertices()) {
    double x = to_double(v.x), y = to_double(v.y);
    pts.push_back({x, y});
    canvas.include(x, y);
  }
  std::ostringstream out;
  open_svg(out, canvas);
  draw_axes(out, canvas);
  if (!pts.empty()) {
    out << "  <polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out << " ";
      out << fmt(canvas.px(pts[i].first)) << "," << fmt(canvas.py(pts[i].second));
    }
    out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    for (const auto& [x, y] : pts)
      out << "  <circle cx=\"" << fmt(canvas.px(x)) << "\" cy=\"" << fmt(canvas.py(y))
          << "\" r=\"2.50\" fill=\"#cc3333\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace forge::svg
