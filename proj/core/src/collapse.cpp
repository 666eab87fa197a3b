#include <algorithm>
#include <map>

#include "torihedra/tiling_graph.hpp"

namespace torihedra {

namespace {

// Editable copy of a map whose darts keep their identity from G(L).
struct Editable {
  std::vector<std::vector<int>> rotation;  // per vertex, original darts ccw
  std::vector<char> alive;                 // per original edge
  std::vector<int> bigons;                 // per original edge
  std::vector<int> color_origin;           // per original dart
};

PeriodicMap build(const PeriodicMap& base, const Editable& ed, std::vector<int>& edge_origin,
                  std::vector<int>& dart_origin) {
  const int nv = base.vertex_count();
  std::vector<int> degrees(nv);
  std::map<int, std::pair<int, int>> where;  // original dart -> (vertex, slot)
  for (int v = 0; v < nv; ++v) {
    degrees[v] = static_cast<int>(ed.rotation[v].size());
    for (int s = 0; s < degrees[v]; ++s) where[ed.rotation[v][s]] = {v, s};
  }
  std::vector<EdgeSpec> edges;
  edge_origin.clear();
  for (int e = 0; e < base.edge_count(); ++e) {
    if (!ed.alive[e]) continue;
    const auto [va, sa] = where.at(base.edge_dart(e, 0));
    const auto [vb, sb] = where.at(base.edge_dart(e, 1));
    edges.push_back({va, sa, vb, sb, base.edges()[e].holonomy});
    edge_origin.push_back(e);
  }
  PeriodicMap m(degrees, std::move(edges));
  dart_origin.assign(m.dart_count(), -1);
  for (int v = 0; v < nv; ++v)
    for (int s = 0; s < degrees[v]; ++s) dart_origin[m.dart(v, s)] = ed.rotation[v][s];
  return m;
}

}  // namespace

TilingGraph collapse_bigons(const TorusDiagram& d) {
  const PeriodicMap& base = d.map();
  Editable ed;
  ed.rotation.resize(base.vertex_count());
  for (int v = 0; v < base.vertex_count(); ++v)
    for (int s = 0; s < base.degree(v); ++s) ed.rotation[v].push_back(base.dart(v, s));
  ed.alive.assign(base.edge_count(), 1);
  ed.bigons.assign(base.edge_count(), 0);
  ed.color_origin.resize(base.dart_count());
  for (int x = 0; x < base.dart_count(); ++x) ed.color_origin[x] = x;

  std::vector<int> edge_origin;
  std::vector<int> dart_origin;
  PeriodicMap m = build(base, ed, edge_origin, dart_origin);
  for (;;) {
    const FaceStructure fs = trace_map_faces(m);
    auto it = std::find_if(fs.faces.begin(), fs.faces.end(), [&](const Face& f) {
      return f.degree() == 2 && m.edge_of(f.darts[0]) != m.edge_of(f.darts[1]);
    });
    if (it == fs.faces.end()) break;
    const int d1 = it->darts[0];
    const int d2 = it->darts[1];
    const int kept = edge_origin[m.edge_of(d1)];
    const int removed = edge_origin[m.edge_of(d2)];
    const int removed_here = dart_origin[m.opposite(d2)];  // same vertex as d1
    const int removed_there = dart_origin[d2];
    ed.color_origin[dart_origin[d1]] = ed.color_origin[removed_here];
    ed.bigons[kept] += ed.bigons[removed] + 1;
    ed.alive[removed] = 0;
    for (auto& rot : ed.rotation)
      rot.erase(std::remove_if(rot.begin(), rot.end(),
                               [&](int x) { return x == removed_here || x == removed_there; }),
                rot.end());
    m = build(base, ed, edge_origin, dart_origin);
  }

  TilingGraph t(m, d.ids(), d.lattice());
  std::vector<int> counts;
  for (int e : edge_origin) counts.push_back(ed.bigons[e]);
  t.set_bigons(std::move(counts));
  std::vector<FaceColor> colors;
  for (const Face& f : t.faces().faces) {
    const int origin = ed.color_origin[dart_origin[f.darts[0]]];
    colors.push_back(d.colors()[d.faces().face_of_dart[origin]]);
  }
  t.set_colors(std::move(colors));
  return t;
}

}  // namespace torihedra
