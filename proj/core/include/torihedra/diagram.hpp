#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "torihedra/periodic_map.hpp"

namespace torihedra {

enum class FaceColor { White, Shaded };

/// Two independent integer vectors spanning the translation lattice.
struct Lattice {
  std::array<int, 4> v{1, 0, 0, 1};

  bool is_standard() const { return v == std::array<int, 4>{1, 0, 0, 1}; }
  friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// An alternating, reduced, cellular 4-valent link diagram on the torus.
/// Crossing slots are counterclockwise; the over strand occupies the slot
/// pair {over, over + 2}.
class TorusDiagram {
 public:
  /// Validates every invariant; throws Error on the first failure.
  static TorusDiagram create(std::vector<int> ids, std::vector<int> over, std::vector<EdgeSpec> edges,
                             Lattice lattice = {});

  const PeriodicMap& map() const { return map_; }
  const FaceStructure& faces() const { return faces_; }
  const std::vector<FaceColor>& colors() const { return colors_; }
  const Lattice& lattice() const { return lattice_; }

  int crossing_count() const { return map_.vertex_count(); }
  int edge_count() const { return map_.edge_count(); }
  int face_count() const { return faces_.face_count(); }
  int id(int v) const { return ids_[v]; }
  const std::vector<int>& ids() const { return ids_; }
  int index_of_id(int id) const;
  /// Representative of the over slot pair, 0 or 1.
  int over(int v) const { return over_[v]; }
  bool is_over(int dart) const { return map_.slot_of(dart) % 2 == over_[map_.vertex_of(dart)]; }
  bool has_bigons() const;

 private:
  TorusDiagram() = default;

  PeriodicMap map_;
  FaceStructure faces_;
  std::vector<FaceColor> colors_;
  std::vector<int> ids_;
  std::vector<int> over_;
  Lattice lattice_;
};

/// Corner of a face at a crossing: the sector between slot and slot + 1.
struct Corner {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct FaceTrace {
  std::vector<std::vector<Corner>> faces;
  std::vector<int> degrees;
  std::vector<FaceColor> colors;
};

FaceTrace trace_faces(const TorusDiagram& d);

/// Builds the alternating diagram on a 4-valent map, choosing over/under so
/// that face 0 of the traced map is white. Throws NotColorable when the faces
/// admit no checkerboard coloring.
TorusDiagram make_alternating(std::vector<int> ids, std::vector<EdgeSpec> edges, Lattice lattice = {});

TorusDiagram parse_diagram(std::string_view text);
std::string serialize(const TorusDiagram& d);

}  // namespace torihedra
