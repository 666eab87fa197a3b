#include "torihedra/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "torihedra/errors.hpp"

namespace torihedra {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

int mod(int a, int n) { return ((a % n) + n) % n; }

constexpr Perm4 kSwap23{0, 1, 3, 2};

std::vector<int> shifts_of(const TilingGraph& t) {
  std::vector<int> s;
  for (int f = 0; f < t.face_count(); ++f) s.push_back(face_shift(t.colors()[f]));
  return s;
}

bool odd(const Perm4& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 1;
}

}  // namespace

int face_shift(FaceColor color) { return color == FaceColor::White ? -1 : 1; }

int tet_edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kTetEdges[e][0] == a && kTetEdges[e][1] == b) return e;
  return -1;
}

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Horizontal: return "horizontal";
    case EdgeKind::Vertical: return "vertical";
    case EdgeKind::Stellating: return "stellating";
  }
  return "?";
}

TorihedralDecomposition build_torihedra(const TorusDiagram& d) {
  auto tl = std::make_shared<const TilingGraph>(collapse_bigons(d));
  const TilingGraph& t = *tl;
  const PeriodicMap& m = t.map();
  const std::vector<int> shift = shifts_of(t);
  TorihedralDecomposition out;
  for (Side side : {Side::Upper, Side::Lower}) {
    Torihedron& h = side == Side::Upper ? out.upper : out.lower;
    h.side = side;
    h.boundary = tl;
    h.colors = t.colors();
    h.rotation = shift;
  }
  const int ne = t.edge_count();
  UnionFind uf(2 * ne);  // upper copies 0..ne-1, lower copies ne..2ne-1
  std::vector<std::vector<int>> vertices_at(2 * ne);
  for (int f = 0; f < t.face_count(); ++f) {
    const Face& face = t.faces().faces[f];
    const int n = face.degree();
    for (int k = 0; k < n; ++k) {
      const int up = m.edge_of(face.darts[k]);
      const int low = m.edge_of(face.darts[mod(k + shift[f], n)]);
      uf.unite(up, ne + low);
      const int corner = shift[f] > 0 ? mod(k + 1, n) : k;
      vertices_at[up].push_back(m.vertex_of(face.darts[corner]));
    }
  }
  std::map<int, int> index;
  for (int c = 0; c < 2 * ne; ++c) {
    const int r = uf.find(c);
    auto [it, fresh] = index.emplace(r, static_cast<int>(out.classes.size()));
    if (fresh) out.classes.emplace_back();
    TorihedralEdgeClass& cls = out.classes[it->second];
    cls.members.push_back({c < ne ? Side::Upper : Side::Lower, c % ne});
    for (int v : vertices_at[c]) cls.vertices.push_back(v);
  }
  for (auto& cls : out.classes) {
    std::sort(cls.vertices.begin(), cls.vertices.end());
    cls.vertices.erase(std::unique(cls.vertices.begin(), cls.vertices.end()), cls.vertices.end());
  }
  return out;
}

IdealTriangulation::IdealTriangulation(std::shared_ptr<const TilingGraph> tiling, std::vector<Tetrahedron> tets,
                                       bool prime)
    : tiling_(std::move(tiling)), tets_(std::move(tets)), prime_(prime) {
  compute_classes();
}

void IdealTriangulation::compute_classes() {
  const int nt = size();
  UnionFind edges(6 * nt);
  UnionFind verts(4 * nt);
  for (int t = 0; t < nt; ++t)
    for (int i = 0; i < 4; ++i) {
      const Gluing& g = tets_[t].glue[i];
      if (g.tet < 0) continue;
      for (int a = 0; a < 4; ++a) {
        if (a == i) continue;
        verts.unite(4 * t + a, 4 * g.tet + g.perm[a]);
        for (int b = a + 1; b < 4; ++b) {
          if (b == i) continue;
          edges.unite(6 * t + tet_edge_index(a, b), 6 * g.tet + tet_edge_index(g.perm[a], g.perm[b]));
        }
      }
    }
  std::set<int> cusp_roots;
  for (int x = 0; x < 4 * nt; ++x) cusp_roots.insert(verts.find(x));
  cusps_ = static_cast<int>(cusp_roots.size());

  const TilingGraph& tl = *tiling_;
  const std::vector<int> shift = shifts_of(tl);
  const PeriodicMap& m = tl.map();
  auto upper_vertex = [&](const TetVertex& x) {
    return m.vertex_of(tl.faces().faces[x.face].darts[x.equator]);
  };
  auto lower_vertex = [&](const TetVertex& x) {
    const Face& f = tl.faces().faces[x.face];
    return m.vertex_of(f.darts[mod(x.equator + shift[x.face], f.degree())]);
  };

  class_of_.assign(6 * nt, -1);
  std::map<int, int> index;
  classes_.clear();
  for (int x = 0; x < 6 * nt; ++x) {
    const int r = edges.find(x);
    auto [it, fresh] = index.emplace(r, static_cast<int>(classes_.size()));
    if (fresh) classes_.emplace_back();
    class_of_[x] = it->second;
    EdgeClass& cls = classes_[it->second];
    const int t = x / 6;
    const int e = x % 6;
    cls.members.push_back({t, e});
    const TetVertex& a = tets_[t].vertices[kTetEdges[e][0]];
    const TetVertex& b = tets_[t].vertices[kTetEdges[e][1]];
    if (a.apex != Apex::None && b.apex != Apex::None) {
      cls.kind = EdgeKind::Stellating;
      cls.face = tets_[t].face;
    } else if (a.apex != Apex::None || b.apex != Apex::None) {
      const TetVertex& apex = a.apex != Apex::None ? a : b;
      const TetVertex& eq = a.apex != Apex::None ? b : a;
      cls.kind = EdgeKind::Vertical;
      cls.apex = apex.apex;
      cls.vertex = apex.apex == Apex::Top ? upper_vertex(eq) : lower_vertex(eq);
    } else {
      cls.kind = EdgeKind::Horizontal;
      const Face& f = tl.faces().faces[a.face];
      const int n = f.degree();
      const int k = mod(b.equator - a.equator, n) == 1 ? a.equator : b.equator;
      const int corner = shift[a.face] > 0 ? mod(k + 1, n) : k;
      cls.crossings.push_back(m.vertex_of(f.darts[corner]));
    }
  }
  for (EdgeClass& cls : classes_) {
    std::sort(cls.crossings.begin(), cls.crossings.end());
    cls.crossings.erase(std::unique(cls.crossings.begin(), cls.crossings.end()), cls.crossings.end());
  }
}

std::string IdealTriangulation::consistency_issue() const {
  for (int t = 0; t < size(); ++t)
    for (int i = 0; i < 4; ++i) {
      const Gluing& g = tets_[t].glue[i];
      const std::string where = "tetrahedron " + std::to_string(t) + " face " + std::to_string(i);
      if (g.tet < 0 || g.tet >= size()) return where + " is unglued";
      if (g.tet == t && g.perm[i] == i) return where + " is glued to itself";
      const Gluing& back = tets_[g.tet].glue[g.perm[i]];
      if (back.tet != t) return where + ": pairing is not an involution";
      for (int a = 0; a < 4; ++a)
        if (back.perm[g.perm[a]] != a) return where + ": pairing permutations are not inverse";
      if (!odd(g.perm)) return where + ": pairing preserves orientation";
    }
  return {};
}

IdealTriangulation stellate(const TorusDiagram& d) {
  return stellate(std::make_shared<const TilingGraph>(collapse_bigons(d)));
}

IdealTriangulation stellate(std::shared_ptr<const TilingGraph> tiling) {
  const TilingGraph& t = *tiling;
  const PeriodicMap& m = t.map();
  const FaceStructure& fs = t.faces();
  if (static_cast<int>(t.colors().size()) != t.face_count())
    throw Error(ErrorKind::MalformedTriangulation, "tiling carries no face colors");
  const std::vector<int> shift = shifts_of(t);
  std::vector<int> first(t.face_count() + 1, 0);
  for (int f = 0; f < t.face_count(); ++f) {
    if (fs.faces[f].degree() < 3)
      throw Error(ErrorKind::MalformedTriangulation, "face of degree below 3 cannot be stellated");
    first[f + 1] = first[f] + fs.faces[f].degree();
  }
  auto tet = [&](int f, int k) { return first[f] + mod(k, fs.faces[f].degree()); };

  std::vector<Tetrahedron> tets(first.back());
  for (int f = 0; f < t.face_count(); ++f) {
    const Face& face = fs.faces[f];
    const int n = face.degree();
    for (int k = 0; k < n; ++k) {
      Tetrahedron& T = tets[tet(f, k)];
      T.kind = TetKind::Stellated;
      T.face = f;
      T.position = k;
      T.vertices = {TetVertex{Apex::Bottom}, TetVertex{Apex::Top}, TetVertex{Apex::None, f, k},
                    TetVertex{Apex::None, f, mod(k + 1, n)}};
      T.glue[3] = {tet(f, k - 1), kSwap23};
      T.glue[2] = {tet(f, k + 1), kSwap23};
      // Upper face across boundary edge k.
      const int r = m.opposite(face.darts[k]);
      T.glue[0] = {tet(fs.face_of_dart[r], fs.position_of_dart[r]), kSwap23};
      // Lower face across boundary edge k + shift.
      const int rl = m.opposite(face.darts[mod(k + shift[f], n)]);
      const int g = fs.face_of_dart[rl];
      T.glue[1] = {tet(g, fs.position_of_dart[rl] - shift[g]), kSwap23};
    }
  }
  return IdealTriangulation(std::move(tiling), std::move(tets), false);
}

IdealTriangulation three_two_moves(const IdealTriangulation& t) {
  const auto& old = t.tetrahedra();
  const FaceStructure& fs = t.tiling().faces();
  std::vector<Tetrahedron> tets;
  // Old (tet, face) -> new (tet, face); internal faces map to (-1, -1).
  std::vector<std::array<std::pair<int, int>, 4>> where(old.size());
  std::vector<std::array<int, 2>> pair_of_face(fs.face_count(), {-1, -1});

  for (int f = 0; f < fs.face_count(); ++f) {
    if (fs.faces[f].degree() != 3) continue;
    std::array<int, 3> members{-1, -1, -1};
    for (int i = 0; i < static_cast<int>(old.size()); ++i)
      if (old[i].kind == TetKind::Stellated && old[i].face == f) members[old[i].position] = i;
    for (int k = 0; k < 3; ++k) {
      if (members[k] < 0 || old[members[k]].glue[2].tet != members[(k + 1) % 3] ||
          old[members[k]].glue[3].tet != members[(k + 2) % 3])
        throw Error(ErrorKind::MalformedTriangulation,
                    "triangle face " + std::to_string(f) + " does not carry a glued bipyramid");
    }
  }

  for (int i = 0; i < static_cast<int>(old.size()); ++i) {
    const Tetrahedron& T = old[i];
    if (T.kind != TetKind::Stellated || fs.faces[T.face].degree() != 3) {
      where[i] = {{{(int)tets.size(), 0}, {(int)tets.size(), 1}, {(int)tets.size(), 2}, {(int)tets.size(), 3}}};
      tets.push_back(T);
      continue;
    }
    const int f = T.face;
    if (pair_of_face[f][0] < 0) {
      Tetrahedron top;
      top.kind = TetKind::TriangleTop;
      top.face = f;
      top.vertices = {TetVertex{Apex::Top}, TetVertex{Apex::None, f, 0}, TetVertex{Apex::None, f, 2},
                      TetVertex{Apex::None, f, 1}};
      Tetrahedron bottom;
      bottom.kind = TetKind::TriangleBottom;
      bottom.face = f;
      bottom.vertices = {TetVertex{Apex::Bottom}, TetVertex{Apex::None, f, 0}, TetVertex{Apex::None, f, 1},
                         TetVertex{Apex::None, f, 2}};
      pair_of_face[f] = {(int)tets.size(), (int)tets.size() + 1};
      tets.push_back(top);
      tets.push_back(bottom);
    }
    auto index_of = [&](int nt, const TetVertex& label) {
      for (int x = 0; x < 4; ++x)
        if (tets[nt].vertices[x] == label) return x;
      return -1;
    };
    const TetVertex far{Apex::None, f, (T.position + 2) % 3};
    where[i][0] = {pair_of_face[f][0], index_of(pair_of_face[f][0], far)};
    where[i][1] = {pair_of_face[f][1], index_of(pair_of_face[f][1], far)};
    where[i][2] = {-1, -1};
    where[i][3] = {-1, -1};
  }

  // Reverse lookup: new (tet, face) -> old (tet, face).
  std::map<std::pair<int, int>, std::pair<int, int>> origin;
  for (int i = 0; i < static_cast<int>(old.size()); ++i)
    for (int j = 0; j < 4; ++j)
      if (where[i][j].first >= 0) origin[where[i][j]] = {i, j};

  auto label_index = [](const Tetrahedron& T, const TetVertex& label) {
    for (int x = 0; x < 4; ++x)
      if (T.vertices[x] == label) return x;
    throw Error(ErrorKind::MalformedTriangulation, "vertex label lost in 3-2 move");
  };

  for (int nt = 0; nt < static_cast<int>(tets.size()); ++nt) {
    Tetrahedron& N = tets[nt];
    for (int i = 0; i < 4; ++i) {
      auto it = origin.find({nt, i});
      if (it == origin.end()) {
        // Internal face between the two triangle tetrahedra.
        const int other = N.kind == TetKind::TriangleTop ? pair_of_face[N.face][1] : pair_of_face[N.face][0];
        Perm4 p{};
        for (int x = 0; x < 4; ++x) p[x] = x == 0 ? 0 : label_index(tets[other], N.vertices[x]);
        N.glue[i] = {other, p};
        continue;
      }
      const auto [oi, oj] = it->second;
      const Gluing& og = old[oi].glue[oj];
      const auto [pt, pf] = where[og.tet][og.perm[oj]];
      Perm4 p{};
      for (int x = 0; x < 4; ++x) {
        if (x == i) {
          p[x] = static_cast<std::uint8_t>(pf);
          continue;
        }
        const int y = label_index(old[oi], N.vertices[x]);
        const TetVertex& target = old[og.tet].vertices[og.perm[y]];
        p[x] = static_cast<std::uint8_t>(label_index(tets[pt], target));
      }
      N.glue[i] = {pt, p};
    }
  }
  return IdealTriangulation(t.tiling_ptr(), std::move(tets), true);
}

std::vector<EdgeCensusRow> edge_census(const IdealTriangulation& t) {
  const TilingGraph& tl = t.tiling();
  const FaceStructure& fs = tl.faces();
  const PeriodicMap& m = tl.map();
  auto weight_vertical = [&](int f) { return t.prime() && fs.faces[f].degree() == 3 ? 1 : 2; };
  auto weight_horizontal = [&](int f) { return t.prime() && fs.faces[f].degree() == 3 ? 2 : 1; };
  std::vector<EdgeCensusRow> rows;
  for (int c = 0; c < static_cast<int>(t.edge_classes().size()); ++c) {
    const EdgeClass& cls = t.edge_classes()[c];
    EdgeCensusRow row{c, cls.kind, cls.degree(), 0};
    switch (cls.kind) {
      case EdgeKind::Stellating:
        row.expected = fs.faces[cls.face].degree();
        break;
      case EdgeKind::Vertical:
        for (int s = 0; s < m.degree(cls.vertex); ++s)
          row.expected += weight_vertical(fs.face_of_dart[m.dart(cls.vertex, s)]);
        break;
      case EdgeKind::Horizontal:
        for (int v : cls.crossings)
          for (int s = 0; s < m.degree(v); ++s) row.expected += weight_horizontal(fs.face_of_dart[m.dart(v, s)]);
        break;
    }
    if (row.degree != row.expected)
      throw Error(ErrorKind::DegreeMismatch, std::string(to_string(cls.kind)) + " edge class " + std::to_string(c) +
                                                 " has degree " + std::to_string(row.degree) + ", expected " +
                                                 std::to_string(row.expected));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace torihedra
