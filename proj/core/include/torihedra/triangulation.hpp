#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "torihedra/diagram.hpp"
#include "torihedra/tiling_graph.hpp"

namespace torihedra {

enum class Side { Upper, Lower };

/// Edge copy of T_L on one torihedron boundary.
struct EdgeCopy {
  Side side = Side::Upper;
  int edge = 0;
  friend auto operator<=>(const EdgeCopy&, const EdgeCopy&) = default;
};

struct Torihedron {
  Side side = Side::Upper;
  /// Boundary graph T_L with ideal vertices.
  std::shared_ptr<const TilingGraph> boundary;
  std::vector<FaceColor> colors;
  /// Per face, +1 when the face boundary is rotated one edge counterclockwise
  /// onto the opposite torihedron, -1 when clockwise (white faces).
  std::vector<int> rotation;
};

struct TorihedralEdgeClass {
  std::vector<EdgeCopy> members;
  /// T_L vertices whose crossings the class runs through.
  std::vector<int> vertices;
  int degree() const { return static_cast<int>(members.size()); }
};

struct TorihedralDecomposition {
  Torihedron upper;
  Torihedron lower;
  std::vector<TorihedralEdgeClass> classes;
};

/// Upper and lower torihedra glued face to face with a one-edge rotation
/// (white faces clockwise, shaded counterclockwise).
TorihedralDecomposition build_torihedra(const TorusDiagram& d);

/// Rotation shift of face f: the upper copy of boundary edge k is glued to
/// the lower copy of edge k + shift.
int face_shift(FaceColor color);

enum class EdgeKind : std::uint8_t { Horizontal, Vertical, Stellating };
enum class Apex : std::int8_t { None, Top, Bottom };
enum class TetKind : std::uint8_t { Stellated, TriangleTop, TriangleBottom };

using Perm4 = std::array<std::uint8_t, 4>;

/// Ideal vertex of a tetrahedron: an apex, or the k-th equator vertex of
/// face `face` (k in T_L face order, upper labelling).
struct TetVertex {
  Apex apex = Apex::None;
  int face = -1;
  int equator = -1;
  friend bool operator==(const TetVertex&, const TetVertex&) = default;
};

struct Gluing {
  int tet = -1;
  Perm4 perm{0, 1, 2, 3};
};

/// Stellated tetrahedra carry vertices (bottom apex, top apex, eq k, eq k+1):
/// edge (0,1) stellating, (2,3) horizontal, the rest vertical. Triangle
/// tetrahedra from a 3-2 move carry (apex, eq 0, eq 2, eq 1) on top and
/// (apex, eq 0, eq 1, eq 2) below.
struct Tetrahedron {
  TetKind kind = TetKind::Stellated;
  int face = 0;
  int position = 0;
  std::array<TetVertex, 4> vertices;
  std::array<Gluing, 4> glue;  // glue[i]: face opposite vertex i
};

/// Tetrahedron edge indices: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3).
/// Opposite edges e and 5 - e share angle pair min(e, 5 - e).
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int tet_edge_index(int a, int b);
inline int angle_pair(int edge) { return edge < 5 - edge ? edge : 5 - edge; }

struct EdgeMember {
  int tet = 0;
  int edge = 0;
};

struct EdgeClass {
  EdgeKind kind = EdgeKind::Horizontal;
  std::vector<EdgeMember> members;
  int face = -1;                 // stellating: face of T_L
  int vertex = -1;               // vertical: T_L vertex
  Apex apex = Apex::None;        // vertical: which side
  std::vector<int> crossings;    // horizontal: T_L vertices of its corners
  int degree() const { return static_cast<int>(members.size()); }
};

class IdealTriangulation {
 public:
  IdealTriangulation(std::shared_ptr<const TilingGraph> tiling, std::vector<Tetrahedron> tets, bool prime);

  const TilingGraph& tiling() const { return *tiling_; }
  std::shared_ptr<const TilingGraph> tiling_ptr() const { return tiling_; }
  const std::vector<Tetrahedron>& tetrahedra() const { return tets_; }
  int size() const { return static_cast<int>(tets_.size()); }
  const std::vector<EdgeClass>& edge_classes() const { return classes_; }
  int class_of(int tet, int edge) const { return class_of_[tet * 6 + edge]; }
  /// Number of ideal vertex classes (cusps).
  int cusp_count() const { return cusps_; }
  /// True for the 3-2-moved triangulation.
  bool prime() const { return prime_; }

  /// Empty when face pairings form a fixed-point-free involution and every
  /// pairing reverses orientation; otherwise a description of the defect.
  std::string consistency_issue() const;

 private:
  void compute_classes();

  std::shared_ptr<const TilingGraph> tiling_;
  std::vector<Tetrahedron> tets_;
  std::vector<EdgeClass> classes_;
  std::vector<int> class_of_;
  int cusps_ = 0;
  bool prime_ = false;
};

/// Stellated bipyramid triangulation of the complement (bigons collapsed).
IdealTriangulation stellate(const TorusDiagram& d);
IdealTriangulation stellate(std::shared_ptr<const TilingGraph> tiling);

/// Replaces every triangle bipyramid by two tetrahedra.
IdealTriangulation three_two_moves(const IdealTriangulation& t);

struct EdgeCensusRow {
  int edge_class = 0;
  EdgeKind kind = EdgeKind::Horizontal;
  int degree = 0;
  int expected = 0;
};

/// Per-class degrees; throws DegreeMismatch when a degree differs from the
/// count predicted by the T_L combinatorics.
std::vector<EdgeCensusRow> edge_census(const IdealTriangulation& t);

const char* to_string(EdgeKind kind);

}  // namespace torihedra
