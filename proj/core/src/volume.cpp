#include "torihedra/volume.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "torihedra/errors.hpp"
#include "torihedra/lobachevsky.hpp"

namespace torihedra {

const GeometryConstants& constants() {
  static const GeometryConstants c{3 * lobachevsky(std::numbers::pi / 3), 8 * lobachevsky(std::numbers::pi / 4),
                                   bipyramid_volume(8), bipyramid_volume(12)};
  return c;
}

double tet_volume(double x, double y, double z) {
  constexpr double pi = std::numbers::pi;
  if (std::abs(x + y + z - pi) > 1e-9)
    throw Error(ErrorKind::AngleSum, "tetrahedron angles do not sum to pi");
  for (double a : {x, y, z})
    if (!(a >= 0 && a <= pi)) throw Error(ErrorKind::AngleSum, "tetrahedron angle outside [0, pi]");
  return lobachevsky(x) + lobachevsky(y) + lobachevsky(z);
}

double bipyramid_volume(int n) {
  if (n < 3) throw Error(ErrorKind::Unsupported, "bipyramid needs n >= 3");
  constexpr double pi = std::numbers::pi;
  return n * (lobachevsky(2 * pi / n) + 2 * lobachevsky(pi / 2 - pi / n));
}

double constant_value(const std::string& name) {
  const GeometryConstants& c = constants();
  if (name == "v_tet") return c.v_tet;
  if (name == "v_oct") return c.v_oct;
  if (name == "v16") return c.v16;
  if (name == "v24") return c.v24;
  throw Error(ErrorKind::Unsupported, "unknown constant " + name);
}

std::string VolumeReport::formula() const {
  std::ostringstream out;
  bool first = true;
  for (const VolumeTerm& t : terms) {
    if (!first) out << " + ";
    out << t.coeff << "*" << t.constant;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

VolumeReport exact_volume(const Census& census, bool bigons, int crossings) {
  if (census.other > 0) throw Error(ErrorKind::Unsupported, "census has faces of unsupported degree");
  VolumeReport r;
  r.census = census;
  r.bigons = bigons;
  r.crossings = crossings;
  auto add = [&](long long coeff, const char* name) {
    if (coeff != 0) r.terms.push_back({coeff, name});
  };
  if (!bigons) {
    if (census.octagons > 0 || census.dodecagons > 0)
      throw Error(ErrorKind::Unsupported, "bigon-free semi-regular links have no octagons or dodecagons");
    add(10LL * census.hexagons, "v_tet");
    add(census.squares, "v_oct");
  } else {
    add(6LL * census.hexagons + 2LL * census.triangles, "v_tet");
    add(census.squares, "v_oct");
    add(census.octagons, "v16");
    add(census.dodecagons, "v24");
  }
  for (const VolumeTerm& t : r.terms) r.value += static_cast<double>(t.coeff) * constant_value(t.constant);
  r.density = density(r.value, crossings);
  return r;
}

double vol_bipyramid_bound(const TilingGraph& t) {
  double total = 0;
  for (const Face& f : t.faces().faces) total += bipyramid_volume(f.degree());
  return total;
}

double density(double volume, int crossings) { return crossings > 0 ? volume / crossings : 0.0; }

}  // namespace torihedra
