#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "torihedra/triangulation.hpp"

namespace torihedra {

/// Dihedral angles per tetrahedron, indexed by angle pair: pair 0 on edges
/// (0,1),(2,3), pair 1 on (0,2),(1,3), pair 2 on (0,3),(1,2).
struct AngleStructure {
  std::vector<std::array<double, 3>> angles;

  double at(int tet, int edge) const { return angles[tet][angle_pair(edge)]; }
  int size() const { return static_cast<int>(angles.size()); }
};

/// Linear constraints A x = b on the angle vector x (x[3t + p] is pair p of
/// tetrahedron t).
struct AngleProblem {
  int tets = 0;
  std::vector<std::vector<std::pair<int, double>>> rows;
  std::vector<double> rhs;
  std::vector<std::string> labels;

  void add_row(std::vector<std::pair<int, double>> row, double value, std::string label);
};

/// Per-tetrahedron sums pi and per-edge-class sums 2 pi.
AngleProblem angle_problem(const IdealTriangulation& t);

/// Half interior angles on vertical edges, 2 pi / n on stellating and
/// horizontal edges, pi / 3 on triangle tetrahedra. Throws NotSemiRegular.
AngleStructure semiregular_angles(const IdealTriangulation& t);

struct TetViolation {
  int tet = 0;
  double sum = 0;
};

struct ClassViolation {
  int edge_class = 0;
  double sum = 0;
};

struct AngleReport {
  bool ok = true;
  double tol = 0;
  std::vector<TetViolation> tetrahedra;
  std::vector<ClassViolation> classes;
  /// Tetrahedra with an angle outside (0, pi).
  std::vector<int> out_of_range;
};

AngleReport verify_angles(const IdealTriangulation& t, const AngleStructure& a, double tol = 1e-9);

struct VolumeMaximum {
  AngleStructure angles;
  double volume = 0;
  /// Set when the maximizer lies within 1e-6 of the boundary of the polytope.
  bool boundary_flag = false;
  double kkt_residual = 0;
  int iterations = 0;
};

/// Maximizes the sum of tetrahedron volumes over the angle structures.
/// Throws Infeasible when no strictly positive angle structure exists.
VolumeMaximum maximize_volume(const AngleProblem& problem);
VolumeMaximum maximize_volume(const IdealTriangulation& t);

double volume_of(const AngleStructure& a);

}  // namespace torihedra
