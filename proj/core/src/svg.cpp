#include "torihedra/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

namespace torihedra {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string pattern_svg(const CirclePattern& p) {
  const TilingGraph& g = p.graph;
  const PeriodicMap& m = g.map();
  const FaceStructure& fs = g.faces();

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](Complex z, double r) {
    xmin = std::min(xmin, z.real() - r);
    xmax = std::max(xmax, z.real() + r);
    ymin = std::min(ymin, z.imag() - r);
    ymax = std::max(ymax, z.imag() + r);
  };
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int f = 0; f < g.face_count(); ++f) grow(p.centers[f] + p.translate({a, b}), p.radii[f]);
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  const double width = xmax - xmin + 2 * pad;
  const double height = ymax - ymin + 2 * pad;
  const double stroke = 0.004 * std::max(width, height);
  // Flip y so that counterclockwise in the plane stays counterclockwise on screen.
  auto X = [&](Complex z) { return num(z.real()); };
  auto Y = [&](Complex z) { return num(-z.imag()); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin - pad) << " " << num(-ymax - pad) << " "
      << num(width) << " " << num(height) << "\">\n";
  out << "<g fill=\"none\" stroke-width=\"" << num(stroke) << "\">\n";
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) {
      const Offset lift{a, b};
      const bool home = a == 0 && b == 0;
      for (int f = 0; f < g.face_count(); ++f) {
        const Complex c = p.centers[f] + p.translate(lift);
        out << "<circle cx=\"" << X(c) << "\" cy=\"" << Y(c) << "\" r=\"" << num(p.radii[f]) << "\" stroke=\""
            << (home ? "#1f5fbf" : "#9db4d9") << "\"/>\n";
      }
      for (int e = 0; e < g.edge_count(); ++e) {
        const int d = m.edge_dart(e, 0);
        const int f = fs.face_of_dart[d];
        const int k = fs.position_of_dart[d];
        const int n = fs.faces[f].degree();
        const Complex s = p.corner(f, k, lift);
        const Complex t = p.corner(f, (k + 1) % n, lift);
        out << "<line x1=\"" << X(s) << "\" y1=\"" << Y(s) << "\" x2=\"" << X(t) << "\" y2=\"" << Y(t)
            << "\" stroke=\"" << (home ? "#000000" : "#888888") << "\"/>\n";
      }
    }
  const Complex o(0, 0);
  const Complex corners[4] = {o, p.t1, p.t1 + p.t2, p.t2};
  out << "<polygon points=\"";
  for (const Complex& z : corners) out << X(z) << "," << Y(z) << " ";
  out << "\" stroke=\"#c0392b\" stroke-dasharray=\"" << num(4 * stroke) << "," << num(3 * stroke) << "\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace torihedra
