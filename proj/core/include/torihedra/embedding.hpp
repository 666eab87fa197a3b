#pragma once

#include <complex>
#include <vector>

#include "torihedra/tiling_graph.hpp"

namespace torihedra {

/// Builds a periodic tiling from its geometry: points are vertex positions
/// (deduplicated modulo the lattice spanned by t1, t2) and every pair of
/// points at distance edge_length becomes an edge, except those whose
/// midpoint matches one in omit (modulo the lattice). The rotation at each
/// vertex follows the edge directions counterclockwise.
TilingGraph build_periodic_tiling(std::complex<double> t1, std::complex<double> t2,
                                  const std::vector<std::complex<double>>& points,
                                  const std::vector<std::complex<double>>& omit = {},
                                  double edge_length = 1.0);

/// Vertices of the regular n-gon with unit sides centered at c; the first
/// vertex sits at angle phase.
std::vector<std::complex<double>> regular_polygon(int n, std::complex<double> c, double phase);

}  // namespace torihedra
