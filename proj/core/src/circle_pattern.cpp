#include "torihedra/circle_pattern.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "torihedra/angle_structure.hpp"
#include "torihedra/arithmetic.hpp"
#include "torihedra/errors.hpp"
#include "torihedra/lobachevsky.hpp"
#include "torihedra/volume.hpp"

namespace torihedra {

namespace {

constexpr double kPi = std::numbers::pi;

TilingGraph bigon_free_graph(const TorusDiagram& d) {
  if (d.has_bigons()) throw Error(ErrorKind::Unsupported, "circle patterns need a diagram without bigons");
  return collapse_bigons(d);
}

// Face across boundary edge k of face f.
int across(const TilingGraph& g, int f, int k) {
  const FaceStructure& fs = g.faces();
  return fs.face_of_dart[g.map().opposite(fs.faces[f].darts[k])];
}

// Half central angle of the kite over edge k of face f.
double half_angle(const TilingGraph& g, const std::vector<double>& r, int f, int k) {
  return std::atan(r[across(g, f, k)] / r[f]);
}

}  // namespace

BsVerdict check_bs_condition(const TorusDiagram& d, int window) {
  BsVerdict v;
  v.window = window;
  if (d.has_bigons()) {
    v.reason = "diagram has bigons";
    return v;
  }
  CutReport wp = is_weakly_prime(d, window);
  if (!wp.passed) {
    v.reason = "not weakly prime: " + wp.reason;
    v.witness = wp.witness;
    return v;
  }
  CutReport ct = has_cycle_of_tangles(d, window);
  if (!ct.passed) {
    v.reason = "4-edge disk cut around more than one crossing: " + ct.reason;
    v.witness = ct.witness;
    return v;
  }
  v.passed = true;
  v.reason = "every 2-edge disk cut is trivial and every 4-edge disk cut surrounds one crossing";
  return v;
}

std::vector<double> closing_residuals(const TilingGraph& g, const std::vector<double>& radii) {
  std::vector<double> out(g.face_count());
  for (int f = 0; f < g.face_count(); ++f) {
    double s = 0;
    for (int k = 0; k < g.faces().faces[f].degree(); ++k) s += 2 * half_angle(g, radii, f, k);
    out[f] = s - 2 * kPi;
  }
  return out;
}

RadiiSolution solve_radii(const TorusDiagram& d, double tol) {
  const TilingGraph g = bigon_free_graph(d);
  const int nf = g.face_count();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(nf);
  auto radii_of = [&](const Eigen::VectorXd& x) {
    std::vector<double> r(nf);
    for (int f = 0; f < nf; ++f) r[f] = std::exp(x(f));
    return r;
  };
  auto residual = [&](const Eigen::VectorXd& x) {
    const std::vector<double> res = closing_residuals(g, radii_of(x));
    return Eigen::Map<const Eigen::VectorXd>(res.data(), nf).eval();
  };
  RadiiSolution out;
  Eigen::VectorXd F = residual(u);
  for (int it = 0; it < 100; ++it) {
    const double norm = F.cwiseAbs().maxCoeff();
    out.history.push_back(norm);
    out.iterations = it;
    if (norm < tol) break;
    Eigen::MatrixXd m = Eigen::MatrixXd::Ones(nf, nf);  // gauge rows fix the mean
    for (int f = 0; f < nf; ++f)
      for (int k = 0; k < g.faces().faces[f].degree(); ++k) {
        const int h = across(g, f, k);
        const double w = 1 / std::cosh(u(h) - u(f));
        m(f, f) += w;
        m(f, h) -= w;
      }
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) out.definite = false;
    Eigen::VectorXd step = llt.info() == Eigen::Success ? Eigen::VectorXd(llt.solve(F))
                                                        : Eigen::VectorXd(m.fullPivLu().solve(F));
    double t = 1;
    Eigen::VectorXd next = u + step;
    Eigen::VectorXd Fn = residual(next);
    while (t > 1e-10 && Fn.cwiseAbs().maxCoeff() >= norm) {
      t *= 0.5;
      next = u + t * step;
      Fn = residual(next);
    }
    if (t <= 1e-10) break;
    u = next;
    u.array() -= u.mean();
    F = Fn;
  }
  out.residual = F.cwiseAbs().maxCoeff();
  if (!(out.residual < tol))
    throw Error(ErrorKind::NoConvergence,
                "circle pattern radii did not converge, residual " + std::to_string(out.residual));
  out.radii = radii_of(u);
  return out;
}

Complex CirclePattern::corner(int f, int k, Offset lift) const {
  const Face& face = graph.faces().faces[f];
  return vertices[graph.map().vertex_of(face.darts[k])] + translate(lift + face.offsets[k]);
}

CirclePattern layout(const TorusDiagram& d, const std::vector<double>& radii, double tol) {
  CirclePattern p;
  p.graph = bigon_free_graph(d);
  const TilingGraph& g = p.graph;
  const PeriodicMap& m = g.map();
  const FaceStructure& fs = g.faces();
  const int nf = g.face_count();
  if (static_cast<int>(radii.size()) != nf) throw Error(ErrorKind::Holonomy, "radius count does not match faces");
  p.radii = radii;

  // Cumulative corner angles per face.
  std::vector<std::vector<double>> corner_angle(nf);
  for (int f = 0; f < nf; ++f) {
    double a = 0;
    for (int k = 0; k < fs.faces[f].degree(); ++k) {
      corner_angle[f].push_back(a);
      a += 2 * half_angle(g, radii, f, k);
    }
    p.closing_residual = std::max(p.closing_residual, std::abs(a - 2 * kPi));
  }

  struct Placed {
    bool done = false;
    Complex center;
    double phase = 0;
    Offset lift;
  };
  std::vector<Placed> placed(nf);
  struct Constraint {
    Offset shift;
    Complex gap;
    double rotation;
  };
  std::vector<Constraint> constraints;
  placed[0] = {true, Complex(0, 0), 0.0, Offset{0, 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    const Face& face = fs.faces[f];
    const int n = face.degree();
    for (int k = 0; k < n; ++k) {
      const int dart = face.darts[k];
      const int r = m.opposite(dart);
      const int h = fs.face_of_dart[r];
      const int j = fs.position_of_dart[r];
      const double phi = half_angle(g, radii, f, k);
      const Complex c = placed[f].center +
                        std::polar(std::hypot(radii[f], radii[h]), placed[f].phase + corner_angle[f][k] + phi);
      const double next_angle = k + 1 < n ? corner_angle[f][k + 1] : 2 * kPi;
      const Complex v = placed[f].center + std::polar(radii[f], placed[f].phase + next_angle);
      const double phase = std::arg(v - c) - corner_angle[h][j];
      const Offset lift = placed[f].lift + neighbor_translate(m, fs, dart);
      if (!placed[h].done) {
        placed[h] = {true, c, phase, lift};
        queue.push_back(h);
      } else {
        constraints.push_back(
            {lift - placed[h].lift, c - placed[h].center, std::remainder(phase - placed[h].phase, 2 * kPi)});
      }
    }
  }

  // Least-squares translations from the closing constraints.
  Eigen::Matrix2d normal = Eigen::Matrix2d::Zero();
  Eigen::Matrix<double, 2, 2> rhs = Eigen::Matrix2d::Zero();  // columns: real, imaginary
  double rotation = 0;
  for (const Constraint& c : constraints) {
    Eigen::Vector2d a(c.shift.x, c.shift.y);
    normal += a * a.transpose();
    rhs.col(0) += a * c.gap.real();
    rhs.col(1) += a * c.gap.imag();
    rotation = std::max(rotation, std::abs(c.rotation));
  }
  if (std::abs(normal.determinant()) < 1e-9) throw Error(ErrorKind::Holonomy, "closing cycles do not span the lattice");
  Eigen::Matrix2d sol = normal.ldlt().solve(rhs);
  p.t1 = Complex(sol(0, 0), sol(0, 1));
  p.t2 = Complex(sol(1, 0), sol(1, 1));
  if (rotation > tol) throw Error(ErrorKind::Holonomy, "holonomy has a rotational part " + std::to_string(rotation));
  for (const Constraint& c : constraints)
    p.layout_residual = std::max(p.layout_residual, std::abs(c.gap - p.translate(c.shift)));

  p.centers.resize(nf);
  p.vertices.assign(g.vertex_count(), Complex(0, 0));
  std::vector<bool> seen(g.vertex_count(), false);
  for (int f = 0; f < nf; ++f) {
    p.centers[f] = placed[f].center - p.translate(placed[f].lift);
    const Face& face = fs.faces[f];
    for (int k = 0; k < face.degree(); ++k) {
      const Complex pos = placed[f].center + std::polar(radii[f], placed[f].phase + corner_angle[f][k]) -
                          p.translate(placed[f].lift + face.offsets[k]);
      const int v = m.vertex_of(face.darts[k]);
      if (!seen[v]) {
        p.vertices[v] = pos;
        seen[v] = true;
      } else {
        p.layout_residual = std::max(p.layout_residual, std::abs(pos - p.vertices[v]));
      }
    }
  }
  if (!(p.layout_residual <= tol))
    throw Error(ErrorKind::Holonomy, "layout does not close up, residual " + std::to_string(p.layout_residual));

  for (int f = 0; f < nf; ++f) {
    const Face& face = fs.faces[f];
    for (int k = 0; k < face.degree(); ++k) {
      const Complex v = p.corner(f, k);
      p.circle_residual = std::max(p.circle_residual, std::abs(std::abs(v - p.centers[f]) - radii[f]));
      const int r = m.opposite(face.darts[k]);
      const int h = fs.face_of_dart[r];
      const Complex other = p.centers[h] + p.translate(neighbor_translate(m, fs, face.darts[k]));
      const double angle = std::abs(std::arg((other - v) / (p.centers[f] - v)));
      p.orthogonality_residual = std::max(p.orthogonality_residual, std::abs(angle - kPi / 2));
    }
  }
  return p;
}

Complex cusp_shape_top(const CirclePattern& p) { return cusp_modulus(p.t1, p.t2); }

Complex edge_parameter(double alpha, double beta, double gamma) {
  return std::polar(std::sin(gamma) / std::sin(beta), alpha);
}

ShapeAssignment shape_parameters(const CirclePattern& p, const IdealTriangulation& t) {
  const TilingGraph& g = p.graph;
  if (t.tiling().face_count() != g.face_count())
    throw Error(ErrorKind::MalformedTriangulation, "triangulation is not built over the pattern's graph");
  ShapeAssignment s;
  for (const Tetrahedron& tet : t.tetrahedra()) {
    if (tet.kind != TetKind::Stellated)
      throw Error(ErrorKind::MalformedTriangulation, "shape parameters need the stellated triangulation");
    if (t.tiling().faces().faces[tet.face].degree() != g.faces().faces[tet.face].degree())
      throw Error(ErrorKind::MalformedTriangulation, "face degrees differ from the pattern's graph");
    const double phi = half_angle(g, p.radii, tet.face, tet.position);
    const double center = 2 * phi;
    if (!(phi > 0 && phi < kPi / 2)) throw Error(ErrorKind::Degenerate, "degenerate link triangle");
    const double base = kPi / 2 - phi;
    // Link triangle (center, v_k, v_k+1) at the top apex; clockwise from the
    // center the corners read center, v_k+1, v_k.
    s.z.push_back({edge_parameter(center, base, base), edge_parameter(base, base, center),
                   edge_parameter(base, center, base)});
  }
  return s;
}

GluingReport verify_gluing(const IdealTriangulation& t, const ShapeAssignment& s, double tol) {
  GluingReport r;
  r.tol = tol;
  r.min_imaginary = std::numeric_limits<double>::infinity();
  for (const auto& z : s.z) {
    r.tet_residual = std::max({r.tet_residual, std::abs(z[0] * z[1] * z[2] + 1.0),
                               std::abs(z[2] - 1.0 / (1.0 - z[0])), std::abs(z[1] - (1.0 - 1.0 / z[0]))});
    for (const Complex& w : z) r.min_imaginary = std::min(r.min_imaginary, w.imag());
  }
  for (int c = 0; c < static_cast<int>(t.edge_classes().size()); ++c) {
    const EdgeClass& cls = t.edge_classes()[c];
    Complex sum(0, 0);
    for (const EdgeMember& m : cls.members) {
      const Complex z = s.at(m.tet, m.edge);
      sum += std::log(z);
      if (cls.kind != EdgeKind::Vertical)
        r.unimodular_residual = std::max(r.unimodular_residual, std::abs(std::abs(z) - 1));
    }
    ClassResidual row{c, cls.kind, cls.apex, std::abs(sum - Complex(0, 2 * kPi))};
    r.max_residual = std::max(r.max_residual, row.residual);
    r.classes.push_back(row);
    if (!(row.residual <= tol)) r.violations.push_back(row);
  }
  r.ok = r.violations.empty() && r.tet_residual <= tol && r.unimodular_residual <= tol && r.min_imaginary > 0;
  return r;
}

double shape_volume(const ShapeAssignment& s) {
  double v = 0;
  for (const auto& z : s.z) v += lobachevsky(std::arg(z[0])) + lobachevsky(std::arg(z[1])) + lobachevsky(std::arg(z[2]));
  return v;
}

VolumeBounds volume_bounds(const CirclePattern& p, const IdealTriangulation& stellated,
                           const IdealTriangulation& prime, double tol_equality) {
  VolumeBounds b;
  b.equality_tol = tol_equality;
  b.vol_perp = shape_volume(shape_parameters(p, stellated));
  const TilingGraph& g = p.graph;
  for (int f = 0; f < g.face_count(); ++f)
    for (int k = 0; k < g.faces().faces[f].degree(); ++k) {
      const double phi = half_angle(g, p.radii, f, k);
      b.vol_perp_kites += lobachevsky(2 * phi) + 2 * lobachevsky(kPi / 2 - phi);
    }
  b.vol_diamond = vol_bipyramid_bound(g);
  const VolumeMaximum mx = maximize_volume(prime);
  b.vol_maximized = mx.volume;
  b.boundary_flag = mx.boundary_flag;
  if (!mx.boundary_flag) b.vol_estimate = mx.volume;
  const double est = b.vol_estimate.value_or(mx.volume);
  b.ordered = b.vol_perp <= est + tol_equality && est <= b.vol_diamond + 1e-8;
  b.equality_flag = b.vol_estimate.has_value() && std::abs(b.vol_perp - est) <= tol_equality &&
                    std::abs(est - b.vol_diamond) <= tol_equality && std::abs(b.vol_perp - b.vol_diamond) <= tol_equality;
  return b;
}

VolumeBounds volume_bounds(const TorusDiagram& d, double tol_newton, double tol_gluing, double tol_equality) {
  const BsVerdict bs = check_bs_condition(d);
  if (!bs.passed) throw Error(ErrorKind::Unsupported, "no orthogonal circle pattern: " + bs.reason);
  const RadiiSolution radii = solve_radii(d, tol_newton);
  const CirclePattern p = layout(d, radii.radii, tol_gluing);
  const IdealTriangulation t = stellate(d);
  return volume_bounds(p, t, three_two_moves(t), tol_equality);
}

}  // namespace torihedra
