#include "torihedra/angle_structure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "torihedra/errors.hpp"
#include "torihedra/lobachevsky.hpp"
#include "torihedra/tiling.hpp"

namespace torihedra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kKkt = 1e-10;
constexpr double kBoundary = 1e-6;

struct Reduced {
  Eigen::MatrixXd a;  // independent rows
  Eigen::VectorXd b;
  Eigen::MatrixXd null;  // orthonormal basis of ker a
};

Reduced reduce(const AngleProblem& p) {
  const int n = 3 * p.tets;
  const int m = static_cast<int>(p.rows.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    for (auto [j, c] : p.rows[i]) a(i, j) += c;
    b(i) = p.rhs[i];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a.transpose());
  qr.setThreshold(1e-10);
  const int rank = static_cast<int>(qr.rank());
  Reduced r;
  r.a.resize(rank, n);
  r.b.resize(rank);
  for (int k = 0; k < rank; ++k) {
    const int row = qr.colsPermutation().indices()(k);
    r.a.row(k) = a.row(row);
    r.b(k) = b(row);
  }
  // Inconsistent dependent rows make the system infeasible.
  Eigen::VectorXd x = r.a.rows() > 0 ? Eigen::VectorXd(r.a.completeOrthogonalDecomposition().solve(r.b))
                                     : Eigen::VectorXd::Zero(n);
  if ((a * x - b).cwiseAbs().maxCoeff() > 1e-8)
    throw Error(ErrorKind::Infeasible, "angle equations are inconsistent");
  Eigen::HouseholderQR<Eigen::MatrixXd> full(r.a.transpose());
  Eigen::MatrixXd q = full.householderQ() * Eigen::MatrixXd::Identity(n, n);
  r.null = q.rightCols(n - rank);
  return r;
}

double max_step(const Eigen::VectorXd& x, const Eigen::VectorXd& d) {
  double t = std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i) {
    if (d(i) < 0) t = std::min(t, -x(i) / d(i));
    if (d(i) > 0) t = std::min(t, (kPi - x(i)) / d(i));
  }
  return t;
}

// Analytic center of the box (0, pi)^n intersected with a x = b, by
// infeasible-start Newton on the log barrier.
Eigen::VectorXd analytic_center(const Reduced& r, int n) {
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, kPi / 3);
  Eigen::VectorXd nu = Eigen::VectorXd::Zero(r.a.rows());
  auto residual = [&](const Eigen::VectorXd& xx, const Eigen::VectorXd& vv) {
    Eigen::VectorXd g = -xx.cwiseInverse() + (Eigen::VectorXd::Constant(n, kPi) - xx).cwiseInverse();
    Eigen::VectorXd dual = g + r.a.transpose() * vv;
    Eigen::VectorXd primal = r.a * xx - r.b;
    return std::sqrt(dual.squaredNorm() + primal.squaredNorm());
  };
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXd s = Eigen::VectorXd::Constant(n, kPi) - x;
    Eigen::VectorXd g = -x.cwiseInverse() + s.cwiseInverse();
    Eigen::VectorXd hinv = (x.cwiseInverse().cwiseAbs2() + s.cwiseInverse().cwiseAbs2()).cwiseInverse();
    Eigen::VectorXd primal = r.a * x - r.b;
    Eigen::MatrixXd schur = r.a * hinv.asDiagonal() * r.a.transpose();
    Eigen::VectorXd w = schur.ldlt().solve(primal - r.a * hinv.cwiseProduct(g));
    Eigen::VectorXd dx = -hinv.cwiseProduct(g + r.a.transpose() * w);
    Eigen::VectorXd dnu = w - nu;
    const double before = residual(x, nu);
    if (before < 1e-11 && primal.cwiseAbs().maxCoeff() < 1e-13) break;
    double t = std::min(1.0, 0.99 * max_step(x, dx));
    while (t > 1e-14 && residual(x + t * dx, nu + t * dnu) > (1 - 0.01 * t) * before) t *= 0.5;
    if (t <= 1e-14) break;
    x += t * dx;
    nu += t * dnu;
  }
  if ((r.a * x - r.b).cwiseAbs().maxCoeff() > 1e-9 || x.minCoeff() <= 0 || x.maxCoeff() >= kPi)
    throw Error(ErrorKind::Infeasible, "no angle structure with all angles in (0, pi)");
  return x;
}

double objective(const Eigen::VectorXd& x, double mu) {
  double f = 0;
  for (int i = 0; i < x.size(); ++i) {
    f += lobachevsky(x(i));
    if (mu > 0) f += mu * (std::log(x(i)) + std::log(kPi - x(i)));
  }
  return f;
}

struct NewtonResult {
  Eigen::VectorXd x;
  double kkt = 0;
  int iterations = 0;
  bool converged = false;
};

// Maximizes objective(., mu) on the affine slice through x along null.
NewtonResult newton(const Eigen::MatrixXd& null, Eigen::VectorXd x, double mu, double tol, int cap) {
  NewtonResult out;
  const int n = static_cast<int>(x.size());
  for (int it = 0; it < cap; ++it) {
    Eigen::VectorXd g(n), h(n);
    for (int i = 0; i < n; ++i) {
      g(i) = -std::log(2 * std::sin(x(i)));
      h(i) = -1 / std::tan(x(i));
      if (mu > 0) {
        g(i) += mu * (1 / x(i) - 1 / (kPi - x(i)));
        h(i) -= mu * (1 / (x(i) * x(i)) + 1 / ((kPi - x(i)) * (kPi - x(i))));
      }
    }
    Eigen::VectorXd gn = null.transpose() * g;
    out.kkt = gn.size() ? gn.cwiseAbs().maxCoeff() : 0.0;
    out.iterations = it;
    if (out.kkt < tol) {
      out.converged = true;
      break;
    }
    Eigen::MatrixXd hn = -(null.transpose() * h.asDiagonal() * null);
    Eigen::LLT<Eigen::MatrixXd> llt(hn);
    Eigen::VectorXd p = llt.info() == Eigen::Success ? Eigen::VectorXd(llt.solve(gn)) : gn;
    if (p.dot(gn) <= 0) p = gn;
    Eigen::VectorXd d = null * p;
    const double slope = g.dot(d);
    double t = std::min(1.0, 0.99 * max_step(x, d));
    const double f0 = objective(x, mu);
    while (t > 1e-16 && objective(x + t * d, mu) < f0 + 1e-4 * t * slope) t *= 0.5;
    if (t <= 1e-16) break;
    x += t * d;
  }
  out.x = std::move(x);
  return out;
}

AngleStructure unpack(const Eigen::VectorXd& x) {
  AngleStructure a;
  a.angles.resize(x.size() / 3);
  for (int t = 0; t < static_cast<int>(a.angles.size()); ++t) a.angles[t] = {x(3 * t), x(3 * t + 1), x(3 * t + 2)};
  return a;
}

}  // namespace

void AngleProblem::add_row(std::vector<std::pair<int, double>> row, double value, std::string label) {
  rows.push_back(std::move(row));
  rhs.push_back(value);
  labels.push_back(std::move(label));
}

AngleProblem angle_problem(const IdealTriangulation& t) {
  AngleProblem p;
  p.tets = t.size();
  for (int i = 0; i < t.size(); ++i)
    p.add_row({{3 * i, 1.0}, {3 * i + 1, 1.0}, {3 * i + 2, 1.0}}, kPi, "tetrahedron " + std::to_string(i));
  for (int c = 0; c < static_cast<int>(t.edge_classes().size()); ++c) {
    std::vector<std::pair<int, double>> row;
    for (const EdgeMember& m : t.edge_classes()[c].members) row.emplace_back(3 * m.tet + angle_pair(m.edge), 1.0);
    p.add_row(std::move(row), 2 * kPi, "edge class " + std::to_string(c));
  }
  return p;
}

AngleStructure semiregular_angles(const IdealTriangulation& t) {
  const VertexClassification cls = classify_vertices(t.tiling());
  if (!cls.semi_regular) throw Error(ErrorKind::NotSemiRegular, cls.reason);
  AngleStructure a;
  for (const Tetrahedron& tet : t.tetrahedra()) {
    if (tet.kind != TetKind::Stellated) {
      a.angles.push_back({kPi / 3, kPi / 3, kPi / 3});
      continue;
    }
    const int n = t.tiling().faces().faces[tet.face].degree();
    const double vertical = (n - 2) * kPi / (2 * n);
    a.angles.push_back({2 * kPi / n, vertical, vertical});
  }
  return a;
}

AngleReport verify_angles(const IdealTriangulation& t, const AngleStructure& a, double tol) {
  AngleReport r;
  r.tol = tol;
  for (int i = 0; i < a.size(); ++i) {
    const auto& x = a.angles[i];
    const double sum = x[0] + x[1] + x[2];
    if (std::abs(sum - kPi) > tol) r.tetrahedra.push_back({i, sum});
    if (std::any_of(x.begin(), x.end(), [](double v) { return !(v > 0 && v < kPi); })) r.out_of_range.push_back(i);
  }
  for (int c = 0; c < static_cast<int>(t.edge_classes().size()); ++c) {
    double sum = 0;
    for (const EdgeMember& m : t.edge_classes()[c].members) sum += a.at(m.tet, m.edge);
    if (std::abs(sum - 2 * kPi) > tol) r.classes.push_back({c, sum});
  }
  r.ok = r.tetrahedra.empty() && r.classes.empty() && r.out_of_range.empty();
  return r;
}

double volume_of(const AngleStructure& a) {
  double v = 0;
  for (const auto& x : a.angles) v += lobachevsky(x[0]) + lobachevsky(x[1]) + lobachevsky(x[2]);
  return v;
}

VolumeMaximum maximize_volume(const AngleProblem& problem) {
  const int n = 3 * problem.tets;
  const Reduced r = reduce(problem);
  Eigen::VectorXd x = analytic_center(r, n);
  NewtonResult res = newton(r.null, x, 0.0, kKkt, 200);
  int iterations = res.iterations;
  if (!res.converged) {
    // Barrier continuation toward a boundary maximizer.
    Eigen::VectorXd y = x;
    for (double mu = 1e-2; mu >= 1e-14; mu *= 0.1) {
      NewtonResult inner = newton(r.null, y, mu, kKkt, 200);
      iterations += inner.iterations;
      y = inner.x;
    }
    NewtonResult polished = newton(r.null, y, 0.0, kKkt, 50);
    iterations += polished.iterations;
    if (objective(polished.x, 0) >= objective(res.x, 0)) res = polished;
  }
  VolumeMaximum out;
  out.angles = unpack(res.x);
  out.volume = objective(res.x, 0);
  out.kkt_residual = res.kkt;
  out.iterations = iterations;
  out.boundary_flag = res.x.minCoeff() < kBoundary || res.x.maxCoeff() > kPi - kBoundary;
  if (!res.converged && !out.boundary_flag)
    throw Error(ErrorKind::NoConvergence,
                "volume maximization stalled with KKT residual " + std::to_string(res.kkt));
  return out;
}

VolumeMaximum maximize_volume(const IdealTriangulation& t) { return maximize_volume(angle_problem(t)); }

}  // namespace torihedra
