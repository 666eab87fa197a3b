#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torihedra/diagram.hpp"
#include "torihedra/periodic_map.hpp"

namespace torihedra {

/// Face counts by degree: T, S, H, Omega, D for 3-, 4-, 6-, 8-, 12-gons.
/// other counts faces of any other degree.
struct Census {
  int triangles = 0;
  int squares = 0;
  int hexagons = 0;
  int octagons = 0;
  int dodecagons = 0;
  int other = 0;

  int faces() const { return triangles + squares + hexagons + octagons + dodecagons + other; }
  friend bool operator==(const Census&, const Census&) = default;
};

/// Euclidean realization of a tiling: positions of vertices in one domain
/// and the two translations matching holonomy (1,0) and (0,1).
struct Embedding {
  std::vector<std::complex<double>> positions;
  std::complex<double> t1;
  std::complex<double> t2;
};

/// A chain of collapsed bigons: consecutive edges joined through 2-valent
/// vertices.
struct TwistRegion {
  std::vector<int> edges;
  std::vector<int> vertices;
  int bigons = 0;
};

/// The bigon-collapsed graph T_L on the torus, or a tiling given directly.
class TilingGraph {
 public:
  TilingGraph() = default;
  /// Throws InvalidTiling when the map is not cellular on the torus.
  TilingGraph(PeriodicMap map, std::vector<int> ids, Lattice lattice = {});

  const PeriodicMap& map() const { return map_; }
  const FaceStructure& faces() const { return faces_; }
  const Lattice& lattice() const { return lattice_; }
  int vertex_count() const { return map_.vertex_count(); }
  int edge_count() const { return map_.edge_count(); }
  int face_count() const { return faces_.face_count(); }
  int id(int v) const { return ids_[v]; }
  const std::vector<int>& ids() const { return ids_; }
  int valence(int v) const { return map_.degree(v); }

  /// Collapsed bigons per edge (0 for edges that were never doubled).
  int bigons(int edge) const { return bigons_.empty() ? 0 : bigons_[edge]; }
  const std::vector<int>& bigon_counts() const { return bigons_; }
  void set_bigons(std::vector<int> counts);
  bool has_bigons() const;
  std::vector<TwistRegion> twist_regions() const;

  /// Colors inherited from the link diagram (not proper across collapsed edges).
  const std::vector<FaceColor>& colors() const { return colors_; }
  void set_colors(std::vector<FaceColor> colors) { colors_ = std::move(colors); }

  const std::optional<Embedding>& embedding() const { return embedding_; }
  void set_embedding(Embedding e) { embedding_ = std::move(e); }

  Census census() const;

 private:
  PeriodicMap map_;
  FaceStructure faces_;
  std::vector<int> ids_;
  Lattice lattice_;
  std::vector<int> bigons_;
  std::vector<FaceColor> colors_;
  std::optional<Embedding> embedding_;
};

TilingGraph parse_tiling(std::string_view text);
std::string serialize(const TilingGraph& t);

/// T_L: collapses every bigon of G(L); bigon-free diagrams give G(L).
TilingGraph collapse_bigons(const TorusDiagram& d);

/// Map-isomorphism code including per-edge bigon counts.
std::vector<std::int64_t> canonical_code(const TilingGraph& t);

}  // namespace torihedra
