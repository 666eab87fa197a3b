#include "torihedra/cuts.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

namespace torihedra {

namespace {

struct Lift {
  int v;
  Offset t;
  friend auto operator<=>(const Lift&, const Lift&) = default;
};

// A lifted edge is keyed by its index and the translate of its side-0 endpoint.
using EdgeKey = std::tuple<int, int, int>;

class CutSearch {
 public:
  CutSearch(const TorusDiagram& d, int cut_size, int window)
      : d_(d), m_(d.map()), fs_(d.faces()), n_(cut_size), window_(window) {}

  std::vector<DiskCut> run() {
    for (int f0 = 0; f0 < fs_.face_count(); ++f0) {
      start_ = f0;
      walk_.clear();
      extend(f0, Offset{});
    }
    std::vector<DiskCut> out;
    for (auto& [key, cut] : found_) out.push_back(cut);
    std::sort(out.begin(), out.end(), [](const DiskCut& a, const DiskCut& b) {
      return std::make_tuple(a.inside.size(), a.inside, a.edges) < std::make_tuple(b.inside.size(), b.inside, b.edges);
    });
    return out;
  }

 private:
  Offset start_of(int dart, Offset face_t) const {
    const Face& f = fs_.faces[fs_.face_of_dart[dart]];
    return face_t + f.offsets[fs_.position_of_dart[dart]];
  }

  EdgeKey key_of(int dart, Offset face_t) const {
    const int e = m_.edge_of(dart);
    Offset a = start_of(dart, face_t);
    if (m_.edge_dart(e, 0) != dart) a += m_.holonomy(dart);
    return {e, a.x, a.y};
  }

  void extend(int face, Offset t) {
    if (static_cast<int>(walk_.size()) == n_) {
      if (face == start_ && t == Offset{}) evaluate();
      return;
    }
    const Face& f = fs_.faces[face];
    for (int dart : f.darts) {
      if (!walk_.empty() && dart == m_.opposite(walk_.back().first)) continue;
      const EdgeKey key = key_of(dart, t);
      bool repeated = false;
      for (const auto& step : walk_)
        if (key_of(step.first, step.second) == key) repeated = true;
      if (repeated) continue;
      walk_.emplace_back(dart, t);
      const int r = m_.opposite(dart);
      extend(fs_.face_of_dart[r], t + neighbor_translate(m_, fs_, dart));
      walk_.pop_back();
    }
  }

  // Flood fill from a lifted vertex avoiding cut edges; returns false when the
  // component leaves the window.
  bool fill(Lift seed, const std::set<EdgeKey>& cut, std::set<Lift>& comp) const {
    std::vector<Lift> stack{seed};
    comp.insert(seed);
    while (!stack.empty()) {
      const Lift cur = stack.back();
      stack.pop_back();
      if (std::max(std::abs(cur.t.x), std::abs(cur.t.y)) > window_) return false;
      for (int s = 0; s < m_.degree(cur.v); ++s) {
        const int dart = m_.dart(cur.v, s);
        const int e = m_.edge_of(dart);
        Offset a = cur.t;
        if (m_.edge_dart(e, 0) != dart) a += m_.holonomy(dart);
        if (cut.count({e, a.x, a.y})) continue;
        const Lift next{m_.vertex_of(m_.opposite(dart)), cur.t + m_.holonomy(dart)};
        if (comp.insert(next).second) stack.push_back(next);
      }
    }
    return true;
  }

  void evaluate() {
    std::set<EdgeKey> cut;
    std::vector<std::pair<Lift, Lift>> ends;
    for (const auto& [dart, t] : walk_) {
      cut.insert(key_of(dart, t));
      const Lift a{m_.vertex_of(dart), start_of(dart, t)};
      const Lift b{m_.vertex_of(m_.opposite(dart)), a.t + m_.holonomy(dart)};
      ends.emplace_back(a, b);
    }
    std::set<Lift> inside;
    std::set<Lift> outside;
    for (const auto& [a, b] : ends) {
      for (const Lift& x : {a, b}) {
        if (inside.count(x) || outside.count(x)) continue;
        std::set<Lift> comp;
        if (fill(x, cut, comp)) {
          inside.insert(comp.begin(), comp.end());
        } else {
          outside.insert(comp.begin(), comp.end());
        }
      }
    }
    if (inside.empty()) return;
    for (const auto& [a, b] : ends)
      if ((inside.count(a) > 0) == (inside.count(b) > 0)) return;
    std::set<int> projected;
    for (const Lift& x : inside)
      if (!projected.insert(x.v).second) return;

    DiskCut c;
    c.cut_size = n_;
    for (const auto& step : walk_) c.edges.push_back(m_.edge_of(step.first));
    std::sort(c.edges.begin(), c.edges.end());
    for (int v : projected) c.inside.push_back(d_.id(v));
    std::set<EdgeKey> interior;
    for (const Lift& x : inside)
      for (int s = 0; s < m_.degree(x.v); ++s) {
        const int dart = m_.dart(x.v, s);
        const int e = m_.edge_of(dart);
        Offset a = x.t;
        if (m_.edge_dart(e, 0) != dart) a += m_.holonomy(dart);
        if (!cut.count({e, a.x, a.y})) interior.insert({e, a.x, a.y});
      }
    c.interior_edges = static_cast<int>(interior.size());

    // Normalize the lift so the first inside vertex sits at the origin.
    std::vector<std::tuple<int, int, int>> key;
    const Offset base = inside.begin()->t;
    for (const Lift& x : inside) key.emplace_back(x.v, x.t.x - base.x, x.t.y - base.y);
    found_.emplace(key, c);
  }

  const TorusDiagram& d_;
  const PeriodicMap& m_;
  const FaceStructure& fs_;
  int n_;
  int window_;
  int start_ = 0;
  std::vector<std::pair<int, Offset>> walk_;
  std::map<std::vector<std::tuple<int, int, int>>, DiskCut> found_;
};

// True when the inside crossings form a single crossing or a chain of bigons.
bool single_twist_region(const TorusDiagram& d, const DiskCut& c) {
  const int k = static_cast<int>(c.inside.size());
  if (k == 1) return true;
  if (c.interior_edges != 2 * (k - 1)) return false;
  const PeriodicMap& m = d.map();
  const FaceStructure& fs = d.faces();
  std::set<int> members;
  for (int id : c.inside) members.insert(d.index_of_id(id));
  // Each inside crossing pair must be joined by exactly the two edges of a bigon.
  std::map<std::pair<int, int>, int> links;
  for (int v : members)
    for (int s = 0; s < 4; ++s) {
      const int dart = m.dart(v, s);
      const int w = m.vertex_of(m.opposite(dart));
      if (!members.count(w) || w == v) continue;
      if (fs.faces[fs.face_of_dart[dart]].degree() == 2 || fs.faces[fs.face_of_dart[m.opposite(dart)]].degree() == 2)
        ++links[{std::min(v, w), std::max(v, w)}];
      else
        return false;
    }
  if (static_cast<int>(links.size()) != k - 1) return false;
  std::map<int, int> valence;
  for (const auto& [pair, count] : links) {
    if (count != 4) return false;  // two edges, each seen from both ends
    ++valence[pair.first];
    ++valence[pair.second];
  }
  int ends = 0;
  for (const auto& [v, deg] : valence) {
    if (deg > 2) return false;
    if (deg == 1) ++ends;
  }
  return ends == 2;
}

}  // namespace

std::vector<DiskCut> enumerate_disk_cuts(const TorusDiagram& d, int cut_size, int window) {
  if (cut_size % 2 != 0) return {};  // n + 2E_I = 4V_I forces even cuts
  return CutSearch(d, cut_size, window).run();
}

CutReport is_weakly_prime(const TorusDiagram& d, int window) {
  CutReport r;
  r.cut_size = 2;
  r.window = window;
  r.cuts = enumerate_disk_cuts(d, 2, window);
  if (!r.cuts.empty()) {
    r.passed = false;
    r.witness = r.cuts.front();
    r.reason = "2-edge disk cut encloses " + std::to_string(r.witness.inside.size()) + " crossing(s)";
  } else {
    r.reason = "no 2-edge disk cut encloses a crossing within window " + std::to_string(window);
  }
  return r;
}

CutReport has_cycle_of_tangles(const TorusDiagram& d, int window) {
  CutReport r;
  r.cut_size = 4;
  r.window = window;
  r.cuts = enumerate_disk_cuts(d, 4, window);
  for (const DiskCut& c : r.cuts) {
    if (!single_twist_region(d, c)) {
      r.passed = false;
      r.witness = c;
      r.reason = "4-edge disk cut encloses " + std::to_string(c.inside.size()) +
                 " crossings that are not a single twist region";
      return r;
    }
  }
  r.reason = "every 4-edge disk cut within window " + std::to_string(window) +
             " encloses a single twist region";
  return r;
}

}  // namespace torihedra
