#include "torihedra/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "tld.hpp"
#include "torihedra/errors.hpp"

namespace torihedra {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::SlotReuse: return "slot used twice";
    case ErrorKind::SlotUnused: return "slot unused";
    case ErrorKind::TooFewCrossings: return "fewer than 2 crossings";
    case ErrorKind::Disconnected: return "disconnected graph";
    case ErrorKind::NonCellular: return "non-cellular";
    case ErrorKind::NonAlternating: return "non-alternating";
    case ErrorKind::NotReduced: return "not reduced";
    case ErrorKind::NotColorable: return "not 2-colorable";
    case ErrorKind::InvalidTiling: return "invalid tiling";
    case ErrorKind::UnmatchedVertex: return "unmatched 3-valent vertex";
    case ErrorKind::NotSemiRegular: return "not semi-regular";
    case ErrorKind::CensusMismatch: return "census mismatch";
    case ErrorKind::UnsupportedCensus: return "unsupported census";
    case ErrorKind::MalformedTriangulation: return "malformed triangulation";
    case ErrorKind::DegreeMismatch: return "degree mismatch";
    case ErrorKind::AngleSum: return "angle-sum violation";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::NoConvergence: return "no convergence";
    case ErrorKind::Holonomy: return "holonomy";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

namespace {

std::string endpoint_name(const TorusDiagram& d, int dart) {
  const PeriodicMap& m = d.map();
  return std::to_string(d.id(m.vertex_of(dart))) + "." + std::to_string(m.slot_of(dart));
}

}  // namespace

TorusDiagram TorusDiagram::create(std::vector<int> ids, std::vector<int> over,
                                  std::vector<EdgeSpec> edges, Lattice lattice) {
  const int n = static_cast<int>(ids.size());
  if (n < 2)
    throw Error(ErrorKind::TooFewCrossings,
                "fewer than 2 crossings: an alternating, reduced, cellular diagram needs at least two");
  if (over.size() != ids.size()) throw Error(ErrorKind::InvalidTiling, "over markers missing");
  if (lattice.v[0] * lattice.v[3] - lattice.v[1] * lattice.v[2] == 0)
    throw Error(ErrorKind::InvalidTiling, "lattice vectors are dependent");

  // Crossings are stored in id order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ids[a] < ids[b]; });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  TorusDiagram d;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && ids[order[i]] == ids[order[i - 1]])
      throw Error(ErrorKind::Syntax, "duplicate crossing id " + std::to_string(ids[order[i]]));
    d.ids_.push_back(ids[order[i]]);
    d.over_.push_back(over[order[i]] % 2);
  }
  for (EdgeSpec& e : edges) {
    if (e.vertex_a < 0 || e.vertex_a >= n || e.vertex_b < 0 || e.vertex_b >= n)
      throw Error(ErrorKind::SlotUnused, "edge endpoint refers to a missing crossing");
    e.vertex_a = rank[e.vertex_a];
    e.vertex_b = rank[e.vertex_b];
  }
  d.lattice_ = lattice;
  d.map_ = PeriodicMap(std::vector<int>(n, 4), std::move(edges));
  const PeriodicMap& m = d.map_;

  if (!m.connected()) throw Error(ErrorKind::Disconnected, "diagram graph is disconnected");

  d.faces_ = trace_map_faces(m);
  const int euler = m.vertex_count() - m.edge_count() + d.faces_.face_count();
  for (const Face& f : d.faces_.faces)
    if (f.net_holonomy != Offset{})
      throw Error(ErrorKind::NonCellular,
                  "non-cellular: face at corner " + endpoint_name(d, f.darts[0]) +
                      " closes with nonzero holonomy (annulus face)");
  if (euler != 0)
    throw Error(ErrorKind::NonCellular,
                "non-cellular: V - E + F = " + std::to_string(euler) + " (torus requires 0)");
  if (cycle_lattice_index(m) != 1)
    throw Error(ErrorKind::NonCellular,
                "non-cellular: cycle holonomies do not generate the translation lattice");

  for (int e = 0; e < m.edge_count(); ++e) {
    const int a = m.edge_dart(e, 0);
    const int b = m.edge_dart(e, 1);
    if (d.is_over(a) == d.is_over(b))
      throw Error(ErrorKind::NonAlternating,
                  "non-alternating along edge " + endpoint_name(d, a) + " - " + endpoint_name(d, b));
  }

  // White is the face in the sector following the over slot.
  d.colors_.assign(d.faces_.face_count(), FaceColor::White);
  std::vector<int> assigned(d.faces_.face_count(), -1);
  for (int dart = 0; dart < m.dart_count(); ++dart) {
    const int f = d.faces_.face_of_dart[dart];
    const int c = d.is_over(dart) ? 0 : 1;
    if (assigned[f] == -1) {
      assigned[f] = c;
    } else if (assigned[f] != c) {
      throw Error(ErrorKind::NotColorable, "faces admit no checkerboard coloring");
    }
  }
  for (int f = 0; f < d.faces_.face_count(); ++f)
    d.colors_[f] = assigned[f] == 0 ? FaceColor::White : FaceColor::Shaded;
  for (int dart = 0; dart < m.dart_count(); ++dart)
    if (assigned[d.faces_.face_of_dart[dart]] == assigned[d.faces_.face_of_dart[m.opposite(dart)]])
      throw Error(ErrorKind::NotColorable, "adjacent faces share a color");

  // Reduced: the four lifted faces around each crossing are distinct.
  for (int v = 0; v < n; ++v) {
    std::set<std::tuple<int, int, int>> seen;
    for (int s = 0; s < 4; ++s) {
      const int dart = m.dart(v, s);
      const int f = d.faces_.face_of_dart[dart];
      const Offset off = d.faces_.faces[f].offsets[d.faces_.position_of_dart[dart]];
      if (!seen.emplace(f, -off.x, -off.y).second)
        throw Error(ErrorKind::NotReduced,
                    "not reduced: a face meets crossing " + std::to_string(d.ids_[v]) + " twice");
    }
  }
  return d;
}

int TorusDiagram::index_of_id(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return static_cast<int>(it - ids_.begin());
}

bool TorusDiagram::has_bigons() const {
  return std::any_of(faces_.faces.begin(), faces_.faces.end(),
                     [](const Face& f) { return f.degree() == 2; });
}

FaceTrace trace_faces(const TorusDiagram& d) {
  FaceTrace out;
  const PeriodicMap& m = d.map();
  for (const Face& f : d.faces().faces) {
    std::vector<Corner> corners;
    for (int dart : f.darts) corners.push_back({d.id(m.vertex_of(dart)), m.slot_of(dart)});
    out.degrees.push_back(f.degree());
    out.faces.push_back(std::move(corners));
  }
  out.colors = d.colors();
  return out;
}

TorusDiagram make_alternating(std::vector<int> ids, std::vector<EdgeSpec> edges, Lattice lattice) {
  const int n = static_cast<int>(ids.size());
  const PeriodicMap m(std::vector<int>(n, 4), edges);
  const FaceStructure fs = trace_map_faces(m);
  const std::vector<int> color = two_color_faces(m, fs);
  if (color.empty()) throw Error(ErrorKind::NotColorable, "faces admit no checkerboard coloring");
  std::vector<int> over(n, 0);
  for (int v = 0; v < n; ++v) over[v] = color[fs.face_of_dart[m.dart(v, 0)]] == 0 ? 0 : 1;
  return TorusDiagram::create(std::move(ids), std::move(over), std::move(edges), lattice);
}

TorusDiagram parse_diagram(std::string_view text) {
  const detail::TldDocument doc = detail::parse_tld(text, "crossing");
  std::vector<int> ids;
  std::vector<int> over;
  std::vector<EdgeSpec> edges = detail::resolve_edges(doc, ids, over, 4);
  return TorusDiagram::create(std::move(ids), std::move(over), std::move(edges), doc.lattice);
}

std::string serialize(const TorusDiagram& d) {
  std::ostringstream out;
  out << "tld 1\n" << detail::format_lattice(d.lattice());
  for (int v = 0; v < d.crossing_count(); ++v)
    out << "crossing " << d.id(v) << " over " << d.over(v) << '\n';
  out << detail::format_edges(d.ids(), d.map().edges());
  return out.str();
}

}  // namespace torihedra
