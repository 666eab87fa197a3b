#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "torihedra/diagram.hpp"
#include "torihedra/tiling_graph.hpp"

namespace torihedra {

using Rational = boost::rational<long long>;

/// Cyclic tuple of face degrees around a vertex, stored in its canonical
/// (lexicographically least over rotations and reflections) form.
struct VertexType {
  std::vector<int> degrees;

  static VertexType canonical(std::vector<int> cyclic);
  std::string name() const;  // e.g. "3.4.6.4"
  /// Sum of 1/n over incident faces, exact.
  Rational reciprocal_sum() const;
  friend auto operator<=>(const VertexType&, const VertexType&) = default;
};

struct VertexClassification {
  std::vector<VertexType> types;  // per vertex
  bool semi_regular = false;
  int witness_vertex = -1;        // id of the first offending vertex
  std::string reason;
};

/// Vertex types and the semi-regularity verdict (4-valent types restricted
/// to the five admissible ones, mixed valence to polygons {3,4,6,8,12}).
VertexClassification classify_vertices(const TilingGraph& t);

struct CensusReport {
  Census census;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int derived_triangles = 0;  // from 4V = 6H + 4S + 3T and V - E + F = 0
  bool euler_ok = false;
  bool stored_identity = false;   // T = 2H on the stored census
  bool derived_identity = false;  // T = 2H on the re-derived count
};

/// Throws CensusMismatch when the identity fails either way.
CensusReport check_census(const TilingGraph& t);

/// Perfect matching of the 3-valent vertices by tiling edges, or nothing.
/// Returned as edge indices; lexicographically least among all matchings
/// when several exist.
std::optional<std::vector<int>> perfect_matching(const TilingGraph& t);

/// All perfect matchings in lexicographic order, at most limit of them.
std::vector<std::vector<int>> perfect_matchings(const TilingGraph& t, std::size_t limit = 1u << 16);

/// Lexicographically least perfect matching whose realized link exists
/// (checkerboard colorable).
std::optional<std::vector<int>> realizable_matching(const TilingGraph& t);

/// Doubles every matched edge into a bigon and makes each vertex a crossing.
TorusDiagram realize_link(const TilingGraph& t, const std::vector<int>& matching);

enum class RightAngledKind { SquareWeave, Triaxial, NotRightAngled };

struct RightAngledResult {
  RightAngledKind kind = RightAngledKind::NotRightAngled;
  /// Offending edge, the angle pi/n1 + pi/n2 as a multiple of pi and the
  /// two face degrees; for a tiling with bigons, the collapsed edge and its
  /// edge-class degree instead.
  int witness_edge = -1;
  Rational angle{0};
  int degree_a = 0;
  int degree_b = 0;
  bool bigon_witness = false;
  int edge_class_degree = 0;
  std::string describe() const;
};

RightAngledResult right_angled_class(const TilingGraph& t);

}  // namespace torihedra
