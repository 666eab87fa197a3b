#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torihedra/diagram.hpp"
#include "torihedra/tiling_graph.hpp"

namespace torihedra {

struct CatalogEntry {
  std::string name;
  std::string vertex_types;
  std::string description;
};

/// Fixed entries plus Lj:1 .. Lj:3 as representatives of the family.
std::vector<CatalogEntry> catalog_entries();

/// Accepts the fixed names, "Lj:<j>" for j >= 1, and the "-link" suffix.
bool is_catalog_name(std::string_view name);

/// Regular-polygon tiling built from its Euclidean geometry.
TilingGraph catalog_tiling(std::string_view name);

/// The frozen link diagram of a catalog entry; Lj:<j> beyond the frozen
/// range is realized on demand.
TorusDiagram catalog_link(std::string_view name);

/// Frozen TLD text, when the entry is stored.
std::optional<std::string_view> frozen_tld(std::string_view name);

/// TLD of the link realized from catalog_tiling with its realizable matching.
std::string generate_tld(std::string_view name);

}  // namespace torihedra
