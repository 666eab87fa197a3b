#pragma once

#include <string>
#include <vector>

#include "torihedra/diagram.hpp"

namespace torihedra {

/// A closed curve crossing the diagram transversely in cut_size edges and
/// bounding a disk. inside lists crossing ids on the disk side; edges lists
/// the severed edge indices (with multiplicity when an edge is cut twice in
/// different lifts).
struct DiskCut {
  int cut_size = 0;
  std::vector<int> edges;
  std::vector<int> inside;
  int interior_edges = 0;

  friend bool operator==(const DiskCut&, const DiskCut&) = default;
};

struct CutReport {
  int cut_size = 0;
  bool passed = true;
  std::string reason;
  /// Witness when !passed.
  DiskCut witness;
  /// Every disk cut of this size found within the window, canonical order.
  std::vector<DiskCut> cuts;
  int window = 0;
};

/// Enumerates disk cuts of the given size whose disk side lies within
/// window x window translates of a fundamental domain in the universal cover.
std::vector<DiskCut> enumerate_disk_cuts(const TorusDiagram& d, int cut_size, int window);

/// Passes iff every 2-edge disk cut encloses no crossing.
CutReport is_weakly_prime(const TorusDiagram& d, int window = 3);

/// Passes iff every 4-edge disk cut encloses a single twist region (no cycle
/// of tangles is present).
CutReport has_cycle_of_tangles(const TorusDiagram& d, int window = 3);

}  // namespace torihedra
