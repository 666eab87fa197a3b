#include "torihedra/tiling.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "torihedra/errors.hpp"

namespace torihedra {

VertexType VertexType::canonical(std::vector<int> cyclic) {
  std::vector<int> best = cyclic;
  const std::size_t n = cyclic.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < n; ++r) {
      std::rotate(cyclic.begin(), cyclic.begin() + 1, cyclic.end());
      best = std::min(best, cyclic);
    }
    std::reverse(cyclic.begin(), cyclic.end());
  }
  return VertexType{best};
}

std::string VertexType::name() const {
  std::string s;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(degrees[i]);
  }
  return s;
}

Rational VertexType::reciprocal_sum() const {
  Rational sum(0);
  for (int n : degrees) sum += Rational(1, n);
  return sum;
}

namespace {

const std::set<std::vector<int>>& four_valent_types() {
  static const std::set<std::vector<int>> types{
      {3, 3, 6, 6}, {3, 6, 3, 6}, {3, 4, 4, 6}, {3, 4, 6, 4}, {4, 4, 4, 4}};
  return types;
}

bool admissible_polygon(int n) { return n == 3 || n == 4 || n == 6 || n == 8 || n == 12; }

std::vector<int> sector_degrees(const TilingGraph& t, int v) {
  std::vector<int> out;
  for (int s = 0; s < t.valence(v); ++s) {
    const int d = t.map().dart(v, s);
    out.push_back(t.faces().faces[t.faces().face_of_dart[d]].degree());
  }
  return out;
}

}  // namespace

VertexClassification classify_vertices(const TilingGraph& t) {
  VertexClassification out;
  out.semi_regular = true;
  auto reject = [&](int v, std::string why) {
    if (!out.semi_regular) return;
    out.semi_regular = false;
    out.witness_vertex = t.id(v);
    out.reason = std::move(why);
  };
  for (int v = 0; v < t.vertex_count(); ++v) {
    const VertexType type = VertexType::canonical(sector_degrees(t, v));
    out.types.push_back(type);
    const std::string label = "vertex " + std::to_string(t.id(v)) + " has type " + type.name();
    if (t.valence(v) == 4) {
      if (type.reciprocal_sum() != Rational(1))
        reject(v, label + ": angle sum differs from 2pi");
      else if (!four_valent_types().count(type.degrees))
        reject(v, label + ": not one of the five admissible 4-valent types");
    } else if (t.valence(v) == 3) {
      for (int n : type.degrees)
        if (!admissible_polygon(n)) reject(v, label + ": polygon outside {3,4,6,8,12}");
      if (type.reciprocal_sum() != Rational(1, 2)) reject(v, label + ": angle sum differs from 2pi");
    } else {
      reject(v, label + ": valence " + std::to_string(t.valence(v)));
    }
  }
  // Collapsed edges between 3-valent ends: 2/n1 + 1/n2 + 2/n3 + 1/n4 = 1.
  const PeriodicMap& m = t.map();
  for (int e = 0; e < t.edge_count(); ++e) {
    if (t.bigons(e) == 0) continue;
    const int a = m.edge_dart(e, 0);
    const int b = m.edge_dart(e, 1);
    const int u = m.vertex_of(a);
    const int w = m.vertex_of(b);
    if (t.valence(u) != 3 || t.valence(w) != 3) continue;
    auto deg = [&](int dart) { return t.faces().faces[t.faces().face_of_dart[dart]].degree(); };
    const int n1 = deg(a);
    const int n3 = deg(b);
    const int n2 = deg(m.next_ccw(a));
    const int n4 = deg(m.next_ccw(b));
    if (Rational(2, n1) + Rational(1, n2) + Rational(2, n3) + Rational(1, n4) != Rational(1))
      reject(u, "collapsed edge at vertex " + std::to_string(t.id(u)) + " violates the paired angle sum");
  }
  if (out.semi_regular) out.reason = "every vertex has an admissible Euclidean type";
  return out;
}

CensusReport check_census(const TilingGraph& t) {
  CensusReport r;
  r.census = t.census();
  r.vertices = t.vertex_count();
  r.edges = t.edge_count();
  r.faces = t.face_count();
  r.euler_ok = r.vertices - r.edges + r.faces == 0;
  const Census& c = r.census;
  // F = V on a 4-valent torus tiling, so T = V - H - S; it must also satisfy
  // 4V = 6H + 4S + 3T.
  r.derived_triangles = r.vertices - c.hexagons - c.squares;
  const bool degree_sum = 4 * r.vertices == 6 * c.hexagons + 4 * c.squares + 3 * r.derived_triangles;
  r.stored_identity = c.triangles == 2 * c.hexagons;
  r.derived_identity = degree_sum && r.derived_triangles == 2 * c.hexagons;
  const bool four_valent = std::all_of(t.map().degrees().begin(), t.map().degrees().end(),
                                       [](int k) { return k == 4; });
  if (!four_valent) throw Error(ErrorKind::CensusMismatch, "census identity needs a 4-valent tiling");
  if (!r.euler_ok || c.other || c.octagons || c.dodecagons || !r.stored_identity ||
      !r.derived_identity || r.derived_triangles != c.triangles)
    throw Error(ErrorKind::CensusMismatch,
                "census mismatch: T=" + std::to_string(c.triangles) + " H=" + std::to_string(c.hexagons) +
                    " S=" + std::to_string(c.squares) + " V=" + std::to_string(r.vertices));
  return r;
}

std::vector<std::vector<int>> perfect_matchings(const TilingGraph& t, std::size_t limit) {
  const PeriodicMap& m = t.map();
  std::vector<int> targets;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.valence(v) == 3) targets.push_back(v);
  std::vector<char> used(t.vertex_count(), 0);
  std::vector<int> chosen;
  std::vector<std::vector<int>> out;
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (out.size() >= limit) return;
    while (i < targets.size() && used[targets[i]]) ++i;
    if (i == targets.size()) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    const int v = targets[i];
    std::set<int> edges;
    for (int s = 0; s < 3; ++s) edges.insert(m.edge_of(m.dart(v, s)));
    for (int e : edges) {
      const int a = m.vertex_of(m.edge_dart(e, 0));
      const int b = m.vertex_of(m.edge_dart(e, 1));
      const int w = a == v ? b : a;
      if (w == v || used[w] || t.valence(w) != 3) continue;
      used[v] = used[w] = 1;
      chosen.push_back(e);
      search(i + 1);
      chosen.pop_back();
      used[v] = used[w] = 0;
    }
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> perfect_matching(const TilingGraph& t) {
  auto all = perfect_matchings(t);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<std::vector<int>> realizable_matching(const TilingGraph& t) {
  for (const auto& matching : perfect_matchings(t)) {
    try {
      realize_link(t, matching);
      return matching;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

TorusDiagram realize_link(const TilingGraph& t, const std::vector<int>& matching) {
  const PeriodicMap& m = t.map();
  std::vector<char> doubled(t.edge_count(), 0);
  std::vector<int> matched_at(t.vertex_count(), 0);
  for (int e : matching) {
    if (e < 0 || e >= t.edge_count()) throw Error(ErrorKind::UnmatchedVertex, "matching edge out of range");
    doubled[e] = 1;
    ++matched_at[m.vertex_of(m.edge_dart(e, 0))];
    ++matched_at[m.vertex_of(m.edge_dart(e, 1))];
  }
  for (int v = 0; v < t.vertex_count(); ++v) {
    const int need = 4 - t.valence(v);
    if (need != matched_at[v])
      throw Error(ErrorKind::UnmatchedVertex,
                  "vertex " + std::to_string(t.id(v)) + " is not covered exactly by the matching");
  }
  // New slot of each original dart; a doubled edge's darts get two slots.
  std::vector<int> slot(m.dart_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    int next = 0;
    for (int s = 0; s < t.valence(v); ++s) {
      const int d = m.dart(v, s);
      slot[d] = next;
      next += doubled[m.edge_of(d)] ? 2 : 1;
    }
  }
  std::vector<EdgeSpec> edges;
  for (int e = 0; e < t.edge_count(); ++e) {
    const EdgeSpec& es = m.edges()[e];
    const int a = slot[m.edge_dart(e, 0)];
    const int b = slot[m.edge_dart(e, 1)];
    if (!doubled[e]) {
      edges.push_back({es.vertex_a, a, es.vertex_b, b, es.holonomy});
    } else {
      // Copies ordered (first, second) at the a end and (second, first) at b.
      edges.push_back({es.vertex_a, a, es.vertex_b, b + 1, es.holonomy});
      edges.push_back({es.vertex_a, a + 1, es.vertex_b, b, es.holonomy});
    }
  }
  return make_alternating(t.ids(), std::move(edges), t.lattice());
}

std::string RightAngledResult::describe() const {
  std::ostringstream out;
  switch (kind) {
    case RightAngledKind::SquareWeave: return "SquareWeave";
    case RightAngledKind::Triaxial: return "Triaxial";
    case RightAngledKind::NotRightAngled: break;
  }
  out << "NotRightAngled: edge " << witness_edge;
  if (bigon_witness) {
    out << " carries a collapsed bigon; its edge class has degree " << edge_class_degree;
  } else {
    out << " between a " << degree_a << "-gon and a " << degree_b << "-gon has angle "
        << angle.numerator() << "pi/" << angle.denominator();
  }
  return out.str();
}

RightAngledResult right_angled_class(const TilingGraph& t) {
  RightAngledResult r;
  const PeriodicMap& m = t.map();
  if (t.has_bigons()) {
    for (const TwistRegion& tr : t.twist_regions()) {
      r.bigon_witness = true;
      r.witness_edge = tr.edges.front();
      r.edge_class_degree = 4 + 2 * tr.bigons;
      return r;
    }
  }
  if (std::any_of(m.degrees().begin(), m.degrees().end(), [](int k) { return k != 4; })) {
    const auto matching = realizable_matching(t);
    r.bigon_witness = true;
    r.witness_edge = matching && !matching->empty() ? matching->front() : -1;
    r.edge_class_degree = 6;
    return r;
  }
  bool all_squares = true;
  bool all_tri_hex = true;
  for (int e = 0; e < t.edge_count(); ++e) {
    const int na = t.faces().faces[t.faces().face_of_dart[m.edge_dart(e, 0)]].degree();
    const int nb = t.faces().faces[t.faces().face_of_dart[m.edge_dart(e, 1)]].degree();
    const Rational angle = Rational(1, na) + Rational(1, nb);
    all_squares = all_squares && na == 4 && nb == 4;
    all_tri_hex = all_tri_hex && std::min(na, nb) == 3 && std::max(na, nb) == 6;
    if (angle == Rational(1, 2)) continue;
    if (r.witness_edge == -1 || angle < r.angle) {
      r.witness_edge = e;
      r.angle = angle;
      r.degree_a = std::min(na, nb);
      r.degree_b = std::max(na, nb);
    }
  }
  if (r.witness_edge == -1 && all_squares) r.kind = RightAngledKind::SquareWeave;
  if (r.witness_edge == -1 && all_tri_hex) r.kind = RightAngledKind::Triaxial;
  return r;
}

}  // namespace torihedra
