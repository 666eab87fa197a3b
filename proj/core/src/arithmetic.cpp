#include "torihedra/arithmetic.hpp"

#include <cmath>

#include "torihedra/errors.hpp"

namespace torihedra {

TraceFieldClass classify_field(const Census& c, bool bigons) {
  if (bigons) throw Error(ErrorKind::Unsupported, "trace field classification covers bigon-free links only");
  if (c.octagons > 0 || c.dodecagons > 0 || c.other > 0)
    throw Error(ErrorKind::Unsupported, "census is not that of a bigon-free semi-regular link");
  TraceFieldClass r;
  if (c.squares > 0 && c.hexagons == 0 && c.triangles == 0) {
    r = {TraceField::QI, "Q(i)", true, "arithmetic, commensurable to the Whitehead link complement"};
  } else if (c.squares == 0 && c.hexagons > 0) {
    r = {TraceField::QISqrt3, "Q(i√3)", true, "arithmetic, commensurable to the figure-8 knot complement"};
  } else if (c.squares > 0 && c.hexagons > 0) {
    r = {TraceField::QISqrt3Mixed, "Q(i,√3)", false,
         "not arithmetic; commensurability within the family decided by volume"};
  } else {
    throw Error(ErrorKind::Unsupported, "census has neither squares nor hexagons");
  }
  return r;
}

CommensurabilityVerdict incommensurable(const Census& a, const Census& b) {
  CommensurabilityVerdict v;
  v.p1 = 10LL * a.hexagons;
  v.q1 = a.squares;
  v.p2 = 10LL * b.hexagons;
  v.q2 = b.squares;
  v.determinant = v.p1 * v.q2 - v.q1 * v.p2;
  v.incommensurable = v.determinant != 0;
  v.verdict = v.incommensurable ? "incommensurable (conditional on v_tet, v_oct rational independence)"
                                : "volume-compatible";
  return v;
}

std::complex<double> cusp_modulus(std::complex<double> t1, std::complex<double> t2) {
  if (std::abs(t1) == 0 || std::abs(std::imag(t2 / t1)) < 1e-12 * std::abs(t2 / t1))
    throw Error(ErrorKind::Degenerate, "translations are collinear");
  std::complex<double> tau = t2 / t1;
  if (tau.imag() < 0) tau = -tau;
  constexpr double eps = 1e-12;
  for (int it = 0; it < 1000; ++it) {
    tau -= std::floor(tau.real() + 0.5 - eps);
    if (std::norm(tau) < 1 - eps) {
      tau = -1.0 / tau;
      continue;
    }
    break;
  }
  if (std::abs(std::norm(tau) - 1) <= eps && tau.real() < 0) tau = -std::conj(tau);
  if (std::abs(tau.real() + 0.5) <= eps) tau += 1.0;
  return tau;
}

}  // namespace torihedra
