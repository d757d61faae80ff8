#include "arcbrick/render.hpp"

#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

namespace arcbrick {

namespace {

constexpr double kUnit = 50.0;
constexpr double kMargin = 30.0;
constexpr double kOffset = 0.4;

struct Stroke {
  Arc arc;
  Color color;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Waypoints in diagram units; y grows upward.
std::vector<std::pair<double, double>> waypoints(const Arc& a) {
  std::vector<std::pair<double, double>> pts{{a.left(), 0.0}};
  for (int m = a.left() + 1; m < a.right(); ++m)
    pts.emplace_back(m, a.side(m) == Side::Above ? kOffset : -kOffset);
  pts.emplace_back(a.right(), 0.0);
  return pts;
}

std::string svg(int n, const std::vector<Stroke>& strokes) {
  const double width = n * kUnit + 2 * kMargin;
  const double height = 2 * kOffset * kUnit + 2 * kMargin;
  const double base = kMargin + kOffset * kUnit;
  auto sx = [&](double x) { return kMargin + (x - 1) * kUnit; };
  auto sy = [&](double y) { return base - y * kUnit; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
      << "\">\n";
  for (const auto& s : strokes) {
    const auto pts = waypoints(s.arc);
    out << "  <path d=\"M " << fmt(sx(pts[0].first)) << " " << fmt(sy(pts[0].second));
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const auto [x0, y0] = pts[k - 1];
      const auto [x1, y1] = pts[k];
      const double dx = (x1 - x0) / 2;
      out << " C " << fmt(sx(x0 + dx)) << " " << fmt(sy(y0)) << " " << fmt(sx(x1 - dx)) << " "
          << fmt(sy(y1)) << " " << fmt(sx(x1)) << " " << fmt(sy(y1));
    }
    out << "\" fill=\"none\" stroke-width=\"2\"";
    if (s.color == Color::Green) {
      out << " stroke=\"green\"";
    } else {
      out << " stroke=\"red\" stroke-dasharray=\"4 3\"";
    }
    out << "/>\n";
  }
  for (int p = 1; p <= n + 1; ++p) {
    out << "  <circle cx=\"" << fmt(sx(p)) << "\" cy=\"" << fmt(base) << "\" r=\"3\" fill=\"black\"/>\n";
    out << "  <text x=\"" << fmt(sx(p)) << "\" y=\"" << fmt(height - 6)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << p << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string tikz(int n, const std::vector<Stroke>& strokes) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  out << "\\begin{scope}[every node/.style={circle, fill=black, inner sep=.5mm, outer sep=0}]\n";
  out << "\\node (1) {};\n";
  for (int p = 2; p <= n + 1; ++p) out << "\\node[right=3mm of " << p - 1 << "] (" << p << ") {};\n";
  out << "\\end{scope}\n";
  out << "\\begin{scope}[thick, rounded corners=8pt]\n";
  for (const auto& s : strokes) {
    out << (s.color == Color::Green ? "\\draw[green] " : "\\draw[red,dotted] ");
    out << "(" << s.arc.left() << ")";
    for (int m = s.arc.left() + 1; m < s.arc.right(); ++m)
      out << "--($(" << m << ") " << (s.arc.side(m) == Side::Above ? '+' : '-') << " (0,3mm)$)";
    out << "--(" << s.arc.right() << ");\n";
  }
  out << "\\end{scope}\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::vector<Stroke> strokes(const ColoredDiagram& d) {
  std::vector<Stroke> out;
  for (const auto& e : d.entries()) out.push_back({e.arc, e.color});
  return out;
}

std::vector<Stroke> strokes(const NoncrossingDiagram& g) {
  std::vector<Stroke> out;
  for (const auto& a : g.arcs()) out.push_back({a, Color::Green});
  return out;
}

}  // namespace

std::string render_svg(const ColoredDiagram& d) { return svg(d.rank(), strokes(d)); }
std::string render_svg(const NoncrossingDiagram& g) { return svg(g.rank(), strokes(g)); }
std::string render_tikz(const ColoredDiagram& d) { return tikz(d.rank(), strokes(d)); }
std::string render_tikz(const NoncrossingDiagram& g) { return tikz(g.rank(), strokes(g)); }

}  // namespace arcbrick
