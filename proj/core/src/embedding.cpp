#include "torihedra/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "torihedra/errors.hpp"

namespace torihedra {

namespace {

constexpr double kTol = 1e-7;

struct Frame {
  std::complex<double> t1;
  std::complex<double> t2;

  // Coordinates of p in the basis (t1, t2).
  std::pair<double, double> coords(std::complex<double> p) const {
    const double det = t1.real() * t2.imag() - t1.imag() * t2.real();
    const double a = (p.real() * t2.imag() - p.imag() * t2.real()) / det;
    const double b = (t1.real() * p.imag() - t1.imag() * p.real()) / det;
    return {a, b};
  }

  std::complex<double> reduce(std::complex<double> p) const {
    auto [a, b] = coords(p);
    a -= std::floor(a + kTol);
    b -= std::floor(b + kTol);
    return a * t1 + b * t2;
  }

  bool same_class(std::complex<double> p, std::complex<double> q) const {
    auto [a, b] = coords(p - q);
    return std::abs(a - std::round(a)) < kTol && std::abs(b - std::round(b)) < kTol;
  }
};

}  // namespace

std::vector<std::complex<double>> regular_polygon(int n, std::complex<double> c, double phase) {
  const double radius = 1.0 / (2.0 * std::sin(std::numbers::pi / n));
  std::vector<std::complex<double>> out;
  for (int k = 0; k < n; ++k) out.push_back(c + std::polar(radius, phase + 2.0 * std::numbers::pi * k / n));
  return out;
}

TilingGraph build_periodic_tiling(std::complex<double> t1, std::complex<double> t2,
                                  const std::vector<std::complex<double>>& points,
                                  const std::vector<std::complex<double>>& omit, double edge_length) {
  const Frame frame{t1, t2};
  if (std::abs(t1.real() * t2.imag() - t1.imag() * t2.real()) < kTol)
    throw Error(ErrorKind::Degenerate, "lattice vectors are collinear");
  std::vector<std::complex<double>> pos;
  for (const auto& p : points) {
    const auto r = frame.reduce(p);
    if (std::none_of(pos.begin(), pos.end(), [&](const auto& q) { return frame.same_class(q, r); }))
      pos.push_back(r);
  }
  const int n = static_cast<int>(pos.size());

  struct Out {
    int target;
    Offset t;
    double angle;
  };
  std::vector<std::vector<Out>> around(n);
  const int reach = 3;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int i = -reach; i <= reach; ++i)
        for (int j = -reach; j <= reach; ++j) {
          const auto q = pos[v] + double(i) * t1 + double(j) * t2;
          if (std::abs(std::abs(q - pos[u]) - edge_length) > kTol) continue;
          const auto mid = 0.5 * (q + pos[u]);
          if (std::any_of(omit.begin(), omit.end(), [&](const auto& o) { return frame.same_class(o, mid); }))
            continue;
          double angle = std::arg(q - pos[u]);
          if (angle < -kTol) angle += 2.0 * std::numbers::pi;
          around[u].push_back({v, {i, j}, angle});
        }
  std::vector<int> degrees(n);
  for (int u = 0; u < n; ++u) {
    std::sort(around[u].begin(), around[u].end(), [](const Out& a, const Out& b) { return a.angle < b.angle; });
    degrees[u] = static_cast<int>(around[u].size());
  }
  auto slot_of = [&](int u, int v, Offset t) {
    for (int s = 0; s < degrees[u]; ++s)
      if (around[u][s].target == v && around[u][s].t == t) return s;
    throw Error(ErrorKind::InvalidTiling, "asymmetric adjacency");
  };
  std::vector<EdgeSpec> edges;
  for (int u = 0; u < n; ++u)
    for (int s = 0; s < degrees[u]; ++s) {
      const Out& o = around[u][s];
      if (o.target < u || (o.target == u && o.t < Offset{})) continue;
      if (o.target == u && o.t == Offset{}) continue;
      edges.push_back({u, s, o.target, slot_of(o.target, u, -o.t), o.t});
    }
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  TilingGraph g(PeriodicMap(degrees, std::move(edges)), ids);
  g.set_embedding({pos, t1, t2});
  return g;
}

}  // namespace torihedra
