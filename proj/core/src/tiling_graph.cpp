#include "torihedra/tiling_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tld.hpp"
#include "torihedra/errors.hpp"

namespace torihedra {

TilingGraph::TilingGraph(PeriodicMap map, std::vector<int> ids, Lattice lattice)
    : map_(std::move(map)), ids_(std::move(ids)), lattice_(lattice) {
  if (static_cast<int>(ids_.size()) != map_.vertex_count())
    throw Error(ErrorKind::InvalidTiling, "vertex id count mismatch");
  if (!map_.connected()) throw Error(ErrorKind::Disconnected, "tiling graph is disconnected");
  faces_ = trace_map_faces(map_);
  for (const Face& f : faces_.faces)
    if (f.net_holonomy != Offset{})
      throw Error(ErrorKind::NonCellular, "tiling face closes with nonzero holonomy");
  if (map_.vertex_count() - map_.edge_count() + faces_.face_count() != 0)
    throw Error(ErrorKind::NonCellular, "tiling is not cellular on the torus");
  if (cycle_lattice_index(map_) != 1)
    throw Error(ErrorKind::NonCellular, "tiling cycle holonomies do not generate the translation lattice");
}

void TilingGraph::set_bigons(std::vector<int> counts) {
  if (static_cast<int>(counts.size()) != edge_count())
    throw Error(ErrorKind::InvalidTiling, "bigon counts do not match edges");
  bigons_ = std::move(counts);
}

bool TilingGraph::has_bigons() const {
  return std::any_of(bigons_.begin(), bigons_.end(), [](int b) { return b > 0; });
}

std::vector<TwistRegion> TilingGraph::twist_regions() const {
  const int ne = edge_count();
  std::vector<int> parent(ne);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < vertex_count(); ++v) {
    if (valence(v) != 2) continue;
    const int a = map_.edge_of(map_.dart(v, 0));
    const int b = map_.edge_of(map_.dart(v, 1));
    if (bigons(a) > 0 && bigons(b) > 0) parent[find(a)] = find(b);
  }
  std::vector<TwistRegion> regions;
  std::vector<int> slot(ne, -1);
  for (int e = 0; e < ne; ++e) {
    if (bigons(e) == 0) continue;
    const int r = find(e);
    if (slot[r] == -1) {
      slot[r] = static_cast<int>(regions.size());
      regions.emplace_back();
    }
    TwistRegion& tr = regions[slot[r]];
    tr.edges.push_back(e);
    tr.bigons += bigons(e);
    for (int side = 0; side < 2; ++side) {
      const int v = map_.vertex_of(map_.edge_dart(e, side));
      if (std::find(tr.vertices.begin(), tr.vertices.end(), v) == tr.vertices.end())
        tr.vertices.push_back(v);
    }
  }
  for (TwistRegion& tr : regions) std::sort(tr.vertices.begin(), tr.vertices.end());
  return regions;
}

Census TilingGraph::census() const {
  Census c;
  for (const Face& f : faces_.faces) {
    switch (f.degree()) {
      case 3: ++c.triangles; break;
      case 4: ++c.squares; break;
      case 6: ++c.hexagons; break;
      case 8: ++c.octagons; break;
      case 12: ++c.dodecagons; break;
      default: ++c.other; break;
    }
  }
  return c;
}

TilingGraph parse_tiling(std::string_view text) {
  const detail::TldDocument doc = detail::parse_tld(text, "vertex");
  std::vector<int> ids;
  std::vector<int> valence;
  std::vector<EdgeSpec> edges = detail::resolve_edges(doc, ids, valence, 0);
  return TilingGraph(PeriodicMap(valence, std::move(edges)), ids, doc.lattice);
}

std::string serialize(const TilingGraph& t) {
  std::ostringstream out;
  out << "tld 1\n" << detail::format_lattice(t.lattice());
  std::vector<int> order(t.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return t.id(a) < t.id(b); });
  for (int v : order) out << "vertex " << t.id(v) << " valence " << t.valence(v) << '\n';
  out << detail::format_edges(t.ids(), t.map().edges());
  return out.str();
}

std::vector<std::int64_t> canonical_code(const TilingGraph& t) {
  return canonical_code(t.map(), t.bigon_counts());
}

}  // namespace torihedra
