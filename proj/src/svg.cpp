#include "gasket/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

struct Rgb {
  int r, g, b;
};

// cold (low) -> white -> warm (high)
Rgb heat_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const Rgb cold{48, 98, 232}, mid{245, 245, 245}, warm{220, 52, 44};
  auto lerp = [](int a, int b, double u) {
    return static_cast<int>(std::lround(a + (b - a) * u));
  };
  if (t < 0.5) {
    double u = t * 2.0;
    return {lerp(cold.r, mid.r, u), lerp(cold.g, mid.g, u), lerp(cold.b, mid.b, u)};
  }
  double u = (t - 0.5) * 2.0;
  return {lerp(mid.r, warm.r, u), lerp(mid.g, warm.g, u), lerp(mid.b, warm.b, u)};
}

std::string rgb_str(Rgb c) {
  std::ostringstream os;
  os << "rgb(" << c.r << "," << c.g << "," << c.b << ")";
  return os.str();
}

}  // namespace

std::string render_svg(const CellStructure& s, const std::vector<double>& values) {
  if (!s.coords)
    throw unsupported_structure("render_svg: structure has no lattice coordinates");
  if (!values.empty() && values.size() != static_cast<std::size_t>(s.vertex_count))
    throw malformed_input("render_svg: values length != vertex count");

  const auto& coords = *s.coords;
  int n = 0;
  for (const auto& p : coords) n = std::max(n, p.a + p.b);
  n = std::max(n, 1);

  const double side = 720.0, margin = 40.0;
  const double unit = side / n;
  const double height = side * std::sqrt(3.0) / 2.0;

  auto px = [&](const LatticePoint& p) {
    return margin + unit * (p.a + 0.5 * p.b);
  };
  auto py = [&](const LatticePoint& p) {
    return margin + height - unit * (std::sqrt(3.0) / 2.0) * p.b;
  };

  double lo = 0.0, hi = 0.0;
  if (!values.empty()) {
    lo = *std::min_element(values.begin(), values.end());
    hi = *std::max_element(values.begin(), values.end());
  }
  auto color_of = [&](int v) {
    if (values.empty()) return std::string("rgb(245,245,245)");
    double t = hi > lo ? (values[v] - lo) / (hi - lo) : 0.5;
    return rgb_str(heat_color(t));
  };

  const AdjacencyGraph g = adjacency(s);
  const double radius = std::max(3.0, std::min(10.0, 28.0 / std::sqrt(double(n))));

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << side + 2 * margin << "\" height=\"" << height + 2 * margin << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (auto [p, q] : g.edges)
    svg << "  <line x1=\"" << px(coords[p]) << "\" y1=\"" << py(coords[p])
        << "\" x2=\"" << px(coords[q]) << "\" y2=\"" << py(coords[q])
        << "\" stroke=\"#999\" stroke-width=\"1.2\"/>\n";
  for (int v = 0; v < s.vertex_count; ++v) {
    const bool bd = s.is_boundary(v);
    svg << "  <circle cx=\"" << px(coords[v]) << "\" cy=\"" << py(coords[v])
        << "\" r=\"" << (bd ? radius * 1.4 : radius) << "\" fill=\""
        << color_of(v) << "\" stroke=\"" << (bd ? "black" : "#555")
        << "\" stroke-width=\"" << (bd ? 2.5 : 0.8) << "\">";
    svg << "<title>v" << v;
    if (!values.empty()) svg << " = " << values[v];
    svg << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gasket
