#include "torihedra/periodic_map.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "torihedra/errors.hpp"

namespace torihedra {

PeriodicMap::PeriodicMap(std::vector<int> degrees, std::vector<EdgeSpec> edges)
    : degrees_(std::move(degrees)), edges_(std::move(edges)) {
  const int n = static_cast<int>(degrees_.size());
  first_dart_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    if (degrees_[v] < 1) throw Error(ErrorKind::InvalidTiling, "vertex with no slots");
    first_dart_[v + 1] = first_dart_[v] + degrees_[v];
  }
  const int darts = first_dart_[n];
  vertex_of_.resize(darts);
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < degrees_[v]; ++s) vertex_of_[first_dart_[v] + s] = v;
  opposite_.assign(darts, -1);
  edge_of_.assign(darts, -1);
  holonomy_.assign(darts, Offset{});

  auto check_slot = [&](int v, int s) {
    if (v < 0 || v >= n || s < 0 || s >= degrees_[v])
      throw Error(ErrorKind::SlotUnused,
                  "endpoint " + std::to_string(v) + "." + std::to_string(s) + " does not exist");
    const int d = first_dart_[v] + s;
    if (edge_of_[d] != -1)
      throw Error(ErrorKind::SlotReuse,
                  "slot " + std::to_string(v) + "." + std::to_string(s) + " used twice");
    return d;
  };
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const EdgeSpec& es = edges_[e];
    const int a = check_slot(es.vertex_a, es.slot_a);
    edge_of_[a] = e;
    const int b = check_slot(es.vertex_b, es.slot_b);
    edge_of_[b] = e;
    opposite_[a] = b;
    opposite_[b] = a;
    holonomy_[a] = es.holonomy;
    holonomy_[b] = -es.holonomy;
  }
  for (int d = 0; d < darts; ++d)
    if (edge_of_[d] == -1)
      throw Error(ErrorKind::SlotUnused, "slot " + std::to_string(vertex_of_[d]) + "." +
                                             std::to_string(slot_of(d)) + " is unused");
}

int PeriodicMap::next_ccw(int d) const {
  const int v = vertex_of_[d];
  const int s = d - first_dart_[v] + 1;
  return first_dart_[v] + (s == degrees_[v] ? 0 : s);
}

int PeriodicMap::prev_ccw(int d) const {
  const int v = vertex_of_[d];
  const int s = d - first_dart_[v];
  return first_dart_[v] + (s == 0 ? degrees_[v] - 1 : s - 1);
}

int PeriodicMap::edge_dart(int e, int side) const {
  const EdgeSpec& es = edges_[e];
  return side == 0 ? dart(es.vertex_a, es.slot_a) : dart(es.vertex_b, es.slot_b);
}

bool PeriodicMap::connected() const {
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < degree(v); ++s) {
      const int w = vertex_of(opposite(dart(v, s)));
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

FaceStructure trace_map_faces(const PeriodicMap& map) {
  FaceStructure fs;
  const int darts = map.dart_count();
  fs.face_of_dart.assign(darts, -1);
  fs.position_of_dart.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (fs.face_of_dart[start] != -1) continue;
    Face face;
    const int id = fs.face_count();
    Offset pos;
    int d = start;
    do {
      fs.face_of_dart[d] = id;
      fs.position_of_dart[d] = face.degree();
      face.darts.push_back(d);
      face.offsets.push_back(pos);
      pos += map.holonomy(d);
      d = map.face_next(d);
    } while (d != start);
    face.net_holonomy = pos;
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

Offset neighbor_translate(const PeriodicMap& map, const FaceStructure& fs, int d) {
  const int r = map.opposite(d);
  const Face& f = fs.faces[fs.face_of_dart[d]];
  const Face& g = fs.faces[fs.face_of_dart[r]];
  // The reverse dart r starts where d ends.
  return f.offsets[fs.position_of_dart[d]] + map.holonomy(d) - g.offsets[fs.position_of_dart[r]];
}

std::vector<int> two_color_faces(const PeriodicMap& map, const FaceStructure& fs) {
  const int nf = fs.face_count();
  std::vector<int> color(nf, -1);
  for (int root = 0; root < nf; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (int d : fs.faces[f].darts) {
        const int g = fs.face_of_dart[map.opposite(d)];
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          return {};
        }
      }
    }
  }
  return color;
}

long long cycle_lattice_index(const PeriodicMap& map) {
  const int n = map.vertex_count();
  if (n == 0) return 0;
  std::vector<Offset> pos(n);
  std::vector<char> placed(n, 0);
  std::vector<int> queue{0};
  placed[0] = 1;
  std::vector<Offset> cycles;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int s = 0; s < map.degree(v); ++s) {
      const int d = map.dart(v, s);
      const int w = map.vertex_of(map.opposite(d));
      const Offset reach = pos[v] + map.holonomy(d);
      if (!placed[w]) {
        placed[w] = 1;
        pos[w] = reach;
        queue.push_back(w);
      } else if (reach != pos[w]) {
        cycles.push_back(reach - pos[w]);
      }
    }
  }
  long long g = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      g = std::gcd(g, static_cast<long long>(cycles[i].x) * cycles[j].y -
                          static_cast<long long>(cycles[i].y) * cycles[j].x);
  return g;
}

namespace {

std::vector<std::int64_t> code_from(const PeriodicMap& map, std::span<const int> labels,
                                    int start) {
  const int darts = map.dart_count();
  std::vector<int> label(darts, -1);
  std::vector<Offset> pos(map.vertex_count());
  std::vector<char> placed(map.vertex_count(), 0);
  std::vector<int> order;
  order.reserve(darts);

  // Visiting a vertex labels its darts in rotation order from the entry dart.
  auto visit = [&](int entry, Offset at) {
    const int v = map.vertex_of(entry);
    placed[v] = 1;
    pos[v] = at;
    int d = entry;
    do {
      label[d] = static_cast<int>(order.size());
      order.push_back(d);
      d = map.next_ccw(d);
    } while (d != entry);
  };
  visit(start, Offset{});
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int d = order[i];
    const int r = map.opposite(d);
    const int w = map.vertex_of(r);
    if (!placed[w]) visit(r, pos[map.vertex_of(d)] + map.holonomy(d));
  }
  if (static_cast<int>(order.size()) != darts) return {};

  std::vector<std::int64_t> code;
  code.reserve(static_cast<std::size_t>(darts) * 5);
  for (int d : order) {
    const int r = map.opposite(d);
    const Offset h = pos[map.vertex_of(d)] + map.holonomy(d) - pos[map.vertex_of(r)];
    code.push_back(label[map.next_ccw(d)]);
    code.push_back(label[r]);
    code.push_back(h.x);
    code.push_back(h.y);
    code.push_back(labels.empty() ? 0 : labels[map.edge_of(d)]);
  }
  return code;
}

}  // namespace

std::vector<std::int64_t> canonical_code(const PeriodicMap& map, std::span<const int> edge_labels) {
  std::vector<std::int64_t> best;
  for (int d = 0; d < map.dart_count(); ++d) {
    auto code = code_from(map, edge_labels, d);
    if (best.empty() || code < best) best = std::move(code);
  }
  best.insert(best.begin(), map.vertex_count());
  return best;
}

}  // namespace torihedra
