#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torihedra/diagram.hpp"
#include "torihedra/tiling_graph.hpp"

namespace torihedra::testing {

/// Seed from TORIHEDRA_SEED when set, otherwise drawn once per process.
/// Printed on first use.
std::uint64_t seed();

/// Square weave written out by hand (slots E, N, W, S).
extern const char* const kSquareWeaveTld;

/// Square weave with crossing 0 replaced by a wheel: four rim crossings
/// around a hub. Bigon-free, weakly prime, fails the tangle condition.
TorusDiagram wheel_diagram();

/// Square weave with crossing 0 replaced by a chain of k crossings joined
/// by bigons (one twist region).
TorusDiagram twist_chain_diagram(int k);

/// Square weave with a trefoil spliced into one edge.
TorusDiagram connected_sum_diagram();

/// Square-lattice tiling by dodecagons, triangles and one square, with
/// vertices of types 3.4.3.12 and 3.12.12.
TilingGraph dodecagon_witness_tiling();

/// 3 x 3 square grid with one edge removed: its two 3-valent vertices are
/// not adjacent.
TilingGraph isolated_three_valent_tiling();

/// Quadrature value of -int_0^theta log|2 sin t| dt for theta in [0, pi].
double lobachevsky_oracle(double theta);

struct PropertyResult {
  std::string name;
  std::uint64_t seed = 0;
  int cases = 0;
  int failures = 0;
  double max_error = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

/// Oracle agreement on (0, pi), oddness and pi-periodicity.
PropertyResult lobachevsky_property(std::uint64_t seed, int cases, double tol = 1e-12);

/// z(alpha) z(beta) z(gamma) = -1 on random triangles.
PropertyResult triangle_product_property(std::uint64_t seed, int cases, double tol = 1e-12);

/// serialize/parse on randomly relabeled catalog diagrams: bit-exact text
/// and unchanged canonical map code.
PropertyResult diagram_roundtrip_property(std::uint64_t seed, int cases);

/// collapse_bigons(realize_link(t, m)) against t with the matching recorded,
/// over random catalog tilings, matchings and vertex relabelings.
PropertyResult bigon_roundtrip_property(std::uint64_t seed, int cases);

/// Scaling all radii leaves shapes, vol_perp and the gluing verdicts fixed.
PropertyResult similarity_property(std::uint64_t seed, int cases, double tol = 1e-12);

/// Random relabeling of a diagram: new ids, slot rotations, lattice
/// translates of crossings, edge flips and edge order.
TorusDiagram relabel(const TorusDiagram& d, std::mt19937_64& rng);

}  // namespace torihedra::testing
