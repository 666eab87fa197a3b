#pragma once

#include <string>

#include "torihedra/circle_pattern.hpp"

namespace torihedra {

/// One fundamental domain and its eight neighbors: stroked circles, graph
/// edges, and the fundamental parallelogram dashed.
std::string pattern_svg(const CirclePattern& p);

}  // namespace torihedra
