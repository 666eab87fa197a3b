#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torihedra/diagram.hpp"

namespace torihedra::detail {

struct TldNode {
  int id = 0;
  int value = 0;  // over slot for crossings, valence for tiling vertices
  int line = 0;
};

struct TldEdge {
  int id_a = 0;
  int slot_a = 0;
  int id_b = 0;
  int slot_b = 0;
  Offset holonomy;
  int line = 0;
  int column = 0;
};

struct TldDocument {
  std::vector<TldNode> nodes;
  std::vector<TldEdge> edges;
  Lattice lattice;
};

/// node_keyword is "crossing" (followed by "over") or "vertex" (followed by
/// "valence").
TldDocument parse_tld(std::string_view text, std::string_view node_keyword);

/// Resolves ids to indices (nodes sorted by id) and returns edge specs.
/// Slots must lie below fixed_degree, or below the node value when
/// fixed_degree is 0.
std::vector<EdgeSpec> resolve_edges(const TldDocument& doc, std::vector<int>& sorted_ids,
                                    std::vector<int>& sorted_values, int fixed_degree);

std::string format_edges(const std::vector<int>& ids, const std::vector<EdgeSpec>& edges);
std::string format_lattice(const Lattice& lattice);

}  // namespace torihedra::detail
