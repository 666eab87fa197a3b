#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "torihedra/cuts.hpp"
#include "torihedra/diagram.hpp"
#include "torihedra/tiling_graph.hpp"
#include "torihedra/triangulation.hpp"

namespace torihedra {

using Complex = std::complex<double>;

struct BsVerdict {
  bool passed = false;
  std::string reason;
  /// Offending cut when the failure comes from a disk cut.
  std::optional<DiskCut> witness;
  int window = 0;
};

/// Orthogonal circle pattern existence: weakly prime, no bigons, and every
/// 4-edge disk cut around a single crossing.
BsVerdict check_bs_condition(const TorusDiagram& d, int window = 3);

struct RadiiSolution {
  /// Radius per face of G(L), geometric mean 1.
  std::vector<double> radii;
  int iterations = 0;
  double residual = 0;
  /// Max face-closing residual before each Newton step.
  std::vector<double> history;
  /// Cholesky of the gauge-fixed negated Jacobian succeeded at every step.
  bool definite = true;
};

/// Solves sum over edges of 2 atan(r_g / r_f) = 2 pi for every face f.
/// Throws Unsupported on bigons and NoConvergence past the iteration cap.
RadiiSolution solve_radii(const TorusDiagram& d, double tol = 1e-12);

/// Face-closing residuals of a radius vector.
std::vector<double> closing_residuals(const TilingGraph& g, const std::vector<double>& radii);

struct CirclePattern {
  TilingGraph graph;
  std::vector<double> radii;
  /// Center of the lift of face f whose corner 0 is the base vertex lift.
  std::vector<Complex> centers;
  /// Base lift of every vertex.
  std::vector<Complex> vertices;
  Complex t1;
  Complex t2;
  /// Mismatch of positions over re-traversed cycles after fitting t1, t2.
  double layout_residual = 0;
  /// Max distance of a vertex from a circle of an incident face.
  double circle_residual = 0;
  /// Max deviation of the angle between radii at an intersection point from pi/2.
  double orthogonality_residual = 0;
  double closing_residual = 0;

  /// Position of corner k of face f on the lift translated by (a, b).
  Complex corner(int f, int k, Offset lift = {}) const;
  Complex translate(Offset o) const { return static_cast<double>(o.x) * t1 + static_cast<double>(o.y) * t2; }
};

/// Develops the pattern across kites. Throws Holonomy when a translation
/// has a rotational part or the residual exceeds tol.
CirclePattern layout(const TorusDiagram& d, const std::vector<double>& radii, double tol = 1e-9);

/// Modulus of the top cusp from the pattern's translations.
Complex cusp_shape_top(const CirclePattern& p);

/// z(alpha) = e^{i alpha} sin(gamma) / sin(beta), angles clockwise.
Complex edge_parameter(double alpha, double beta, double gamma);

/// Edge parameters per tetrahedron, indexed like AngleStructure pairs:
/// pair 0 on (0,1),(2,3), pair 1 on (0,2),(1,3), pair 2 on (0,3),(1,2).
struct ShapeAssignment {
  std::vector<std::array<Complex, 3>> z;
  Complex at(int tet, int edge) const { return z[tet][angle_pair(edge)]; }
};

/// Shapes of the stellated triangulation from the link triangles at the
/// top apex. Throws MalformedTriangulation when t is not stellated over the
/// pattern's graph.
ShapeAssignment shape_parameters(const CirclePattern& p, const IdealTriangulation& t);

struct ClassResidual {
  int edge_class = 0;
  EdgeKind kind = EdgeKind::Horizontal;
  Apex apex = Apex::None;
  /// |sum of principal logs - 2 pi i|
  double residual = 0;
};

struct GluingReport {
  bool ok = true;
  double tol = 0;
  std::vector<ClassResidual> classes;
  /// Entries of classes above tol.
  std::vector<ClassResidual> violations;
  double max_residual = 0;
  /// Max of |z1 z2 z3 + 1| and |z2 - 1/(1 - z1)| over tetrahedra.
  double tet_residual = 0;
  /// Max of ||z| - 1| over stellating and horizontal members.
  double unimodular_residual = 0;
  double min_imaginary = 0;
};

GluingReport verify_gluing(const IdealTriangulation& t, const ShapeAssignment& s, double tol = 1e-9);

/// Sum of Lobachevsky volumes with angles arg z.
double shape_volume(const ShapeAssignment& s);

struct VolumeBounds {
  double vol_perp = 0;
  /// Same quantity assembled kite by kite from the radii.
  double vol_perp_kites = 0;
  double vol_diamond = 0;
  /// Maximized angle-structure volume; empty when the maximizer is on the boundary.
  std::optional<double> vol_estimate;
  double vol_maximized = 0;
  bool boundary_flag = false;
  /// vol_perp <= vol_estimate <= vol_diamond + 1e-8.
  bool ordered = false;
  bool equality_flag = false;
  double equality_tol = 1e-8;
};

VolumeBounds volume_bounds(const TorusDiagram& d, double tol_newton = 1e-12, double tol_gluing = 1e-9,
                           double tol_equality = 1e-8);
VolumeBounds volume_bounds(const CirclePattern& p, const IdealTriangulation& stellated,
                           const IdealTriangulation& prime, double tol_equality = 1e-8);

}  // namespace torihedra
