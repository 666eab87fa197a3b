#pragma once

#include <complex>
#include <string>

#include "torihedra/tiling_graph.hpp"

namespace torihedra {

enum class TraceField { QI, QISqrt3, QISqrt3Mixed };

struct TraceFieldClass {
  TraceField field = TraceField::QI;
  std::string label;  // "Q(i)", "Q(i√3)", "Q(i,√3)"
  bool arithmetic = false;
  std::string note;
};

/// Invariant trace field class of a bigon-free semi-regular census.
/// Throws Unsupported for censuses with bigons or no squares and hexagons.
TraceFieldClass classify_field(const Census& census, bool bigons = false);

struct CommensurabilityVerdict {
  long long p1 = 0, q1 = 0, p2 = 0, q2 = 0;
  long long determinant = 0;
  bool incommensurable = false;
  std::string verdict;
};

/// Compares volumes p v_tet + q v_oct with p = 10H, q = S.
CommensurabilityVerdict incommensurable(const Census& a, const Census& b);

/// Modulus t2 / t1 reduced to the standard fundamental domain of SL(2, Z):
/// Im > 0, -1/2 < Re <= 1/2, |tau| >= 1 (Re >= 0 when |tau| = 1).
/// Throws Degenerate for collinear translations.
std::complex<double> cusp_modulus(std::complex<double> t1, std::complex<double> t2);

}  // namespace torihedra
