#include "omrs_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace omrs::cli {

namespace {

constexpr double kCanvas = 600.0;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Point {
  double x = 0;
  double y = 0;
};

// Liang-Barsky clip of p + t d to the square [lo, hi]^2.
std::optional<std::pair<Point, Point>> clip(Point p, Point d, double lo_x, double hi_x, double lo_y, double hi_y) {
  double t0 = -1e300, t1 = 1e300;
  const double pd[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {p.x - lo_x, hi_x - p.x, p.y - lo_y, hi_y - p.y};
  for (int i = 0; i < 4; ++i) {
    if (pd[i] == 0) {
      if (q[i] < 0) return std::nullopt;
      continue;
    }
    const double t = q[i] / pd[i];
    if (pd[i] < 0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  if (t0 >= t1) return std::nullopt;
  return std::make_pair(Point{p.x + t0 * d.x, p.y + t0 * d.y}, Point{p.x + t1 * d.x, p.y + t1 * d.y});
}

}  // namespace

std::string emit_svg(const CrossSection& cs, const RootSlice& slice, const SvgLabels& labels) {
  const std::size_t n = cs.vertices.size();
  if (n < 3) throw std::invalid_argument("emit_svg: the distinguished region is not a bounded polygon");
  const auto verts2 = plane_coordinates(cs, cs.vertices);
  std::vector<Point> verts;
  Point centre;
  for (const auto& [x, y] : verts2) {
    verts.push_back({x, y});
    centre.x += x / n;
    centre.y += y / n;
  }
  double extent = 0;
  for (const auto& v : verts) extent = std::max({extent, std::fabs(v.x - centre.x), std::fabs(v.y - centre.y)});
  const double half = 2.2 * extent;
  const double lo_x = centre.x - half, hi_x = centre.x + half;
  const double lo_y = centre.y - half, hi_y = centre.y + half;
  const double scale = kCanvas / (2 * half);
  auto sx = [&](double x) { return num((x - lo_x) * scale); };
  auto sy = [&](double y) { return num((hi_y - y) * scale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";

  os << "<path class=\"region\" d=\"";
  for (std::size_t k = 0; k < n; ++k) os << (k == 0 ? "M " : " L ") << sx(verts[k].x) << " " << sy(verts[k].y);
  os << " Z\" fill=\"#dde8f4\" stroke=\"none\"/>\n";

  for (std::size_t cls : cs.line_classes) {
    const Vector& beta = slice.vec(2 * cls);
    // Point of the trace: f = x u + y beta with <f, beta> = 0, <f, u> = 1.
    const Matrix gram = Matrix::from_rows({{dot(cs.u, cs.u), dot(cs.u, beta)}, {dot(beta, cs.u), dot(beta, beta)}});
    const auto xy = solve_linear(gram, Vector{FieldElement(1), FieldElement(0)});
    if (!xy) continue;
    const Vector f0 = (*xy)[0] * cs.u + (*xy)[1] * beta;
    const Vector f1 = f0 + cross(beta, cs.u);
    const auto pts = plane_coordinates(cs, {f0, f1});
    const Point p{pts[0].first, pts[0].second};
    const Point d{pts[1].first - p.x, pts[1].second - p.y};
    const auto seg = clip(p, d, lo_x, hi_x, lo_y, hi_y);
    if (!seg) continue;
    const auto& [a, b] = *seg;
    const bool side = cs.side_of(cls).has_value();
    os << "<line class=\"trace\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\""
       << sy(b.y) << "\" stroke=\"" << (side ? "#1f3b73" : "#8a8a8a") << "\" stroke-width=\"" << (side ? "2" : "1")
       << "\"/>\n";
    const Point at{a.x + 0.08 * (b.x - a.x), a.y + 0.08 * (b.y - a.y)};
    os << "<text class=\"trace-label\" x=\"" << sx(at.x) << "\" y=\"" << sy(at.y)
       << "\" font-size=\"12\" font-family=\"serif\">&#946;<tspan baseline-shift=\"sub\" font-size=\"9\">" << cls + 1
       << "</tspan>&#8869;</text>\n";
  }

  for (std::size_t k = 0; k < n; ++k) {
    const double dx = verts[k].x - centre.x, dy = verts[k].y - centre.y;
    const double len = std::hypot(dx, dy);
    const double off = len > 0 ? 0.12 * extent / len : 0;
    os << "<circle class=\"vertex\" cx=\"" << sx(verts[k].x) << "\" cy=\"" << sy(verts[k].y)
       << "\" r=\"3\" fill=\"#1f3b73\"/>\n";
    os << "<text class=\"vertex-label\" x=\"" << sx(verts[k].x + off * dx) << "\" y=\"" << sy(verts[k].y + off * dy)
       << "\" font-size=\"13\" font-family=\"serif\" text-anchor=\"middle\">v<tspan baseline-shift=\"sub\" "
          "font-size=\"9\">"
       << k + 1 << "</tspan></text>\n";
  }

  // Region labels: R at the centre, the others mirrored across a side.
  auto across = [&](std::size_t side) {
    const Point& a = verts[side];
    const Point& b = verts[(side + 1) % n];
    return Point{a.x + b.x - centre.x, a.y + b.y - centre.y};
  };
  auto region_label = [&](const Point& p, const std::string& text) {
    os << "<text class=\"region-label\" x=\"" << sx(p.x) << "\" y=\"" << sy(p.y)
       << "\" font-size=\"16\" font-family=\"serif\" font-style=\"italic\" text-anchor=\"middle\">" << text
       << "</text>\n";
  };
  region_label(centre, labels.region);
  if (!labels.across_first_side.empty()) region_label(across(0), labels.across_first_side);
  if (!labels.across_third_side.empty()) region_label(across(2 % n), labels.across_third_side);
  os << "</svg>\n";
  return os.str();
}

}  // namespace omrs::cli
