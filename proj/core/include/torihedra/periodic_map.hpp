#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace torihedra {

/// Integer translation in the lattice basis.
struct Offset {
  int x = 0;
  int y = 0;

  friend Offset operator+(Offset a, Offset b) { return {a.x + b.x, a.y + b.y}; }
  friend Offset operator-(Offset a, Offset b) { return {a.x - b.x, a.y - b.y}; }
  friend Offset operator-(Offset a) { return {-a.x, -a.y}; }
  Offset& operator+=(Offset o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend auto operator<=>(const Offset&, const Offset&) = default;
};

/// One edge of a map: endpoint (vertex_a, slot_a) joined to (vertex_b, slot_b),
/// with holonomy measured from a to b.
struct EdgeSpec {
  int vertex_a = 0;
  int slot_a = 0;
  int vertex_b = 0;
  int slot_b = 0;
  Offset holonomy;
};

/// Combinatorial map of a graph on the torus: per-vertex rotation (slots in
/// counterclockwise order), an edge involution on darts, and a Z^2 holonomy
/// per dart. A dart is identified with the slot it leaves from.
class PeriodicMap {
 public:
  PeriodicMap() = default;

  /// Throws Error(SlotReuse / SlotUnused) when slots are not used exactly once.
  PeriodicMap(std::vector<int> degrees, std::vector<EdgeSpec> edges);

  int vertex_count() const { return static_cast<int>(first_dart_.size()) - 1; }
  int dart_count() const { return static_cast<int>(vertex_of_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int degree(int v) const { return first_dart_[v + 1] - first_dart_[v]; }
  int dart(int v, int slot) const { return first_dart_[v] + slot; }
  int vertex_of(int d) const { return vertex_of_[d]; }
  int slot_of(int d) const { return d - first_dart_[vertex_of_[d]]; }
  int opposite(int d) const { return opposite_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  Offset holonomy(int d) const { return holonomy_[d]; }

  int next_ccw(int d) const;
  int prev_ccw(int d) const;
  /// Next dart along the face lying to the left of d.
  int face_next(int d) const { return prev_ccw(opposite(d)); }

  /// Darts of edge e; side 0 leaves vertex_a, side 1 leaves vertex_b.
  int edge_dart(int e, int side) const;
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  const std::vector<int>& degrees() const { return degrees_; }

  bool connected() const;

 private:
  std::vector<int> degrees_;
  std::vector<EdgeSpec> edges_;
  std::vector<int> first_dart_{0};
  std::vector<int> vertex_of_;
  std::vector<int> opposite_;
  std::vector<int> edge_of_;
  std::vector<Offset> holonomy_;
};

/// A face traced from the rotation system. darts[k] leaves the k-th corner
/// vertex; offsets[k] is that vertex's lattice translate relative to corner 0.
struct Face {
  std::vector<int> darts;
  std::vector<Offset> offsets;
  Offset net_holonomy;

  int degree() const { return static_cast<int>(darts.size()); }
};

struct FaceStructure {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;
  std::vector<int> position_of_dart;

  int face_count() const { return static_cast<int>(faces.size()); }
};

FaceStructure trace_map_faces(const PeriodicMap& map);

/// Translate of the face adjacent across dart d, relative to the face of d
/// (both anchored at their corner 0).
Offset neighbor_translate(const PeriodicMap& map, const FaceStructure& fs, int d);

/// Index in Z^2 of the lattice generated by the holonomies of closed walks;
/// 0 when they span less than rank 2. A cellular torus map has index 1.
long long cycle_lattice_index(const PeriodicMap& map);

/// Proper 2-coloring of the faces (adjacent faces differ), face 0 colored 0.
/// Empty when the dual graph is not bipartite.
std::vector<int> two_color_faces(const PeriodicMap& map, const FaceStructure& fs);

/// Canonical code of the map under relabeling, minimized over starting darts.
/// edge_labels (optional, per edge) are folded into the code.
std::vector<std::int64_t> canonical_code(const PeriodicMap& map,
                                         std::span<const int> edge_labels = {});

}  // namespace torihedra
