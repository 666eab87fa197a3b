#pragma once

#include <string>
#include <vector>

#include "torihedra/tiling_graph.hpp"

namespace torihedra {

struct GeometryConstants {
  double v_tet;
  double v_oct;
  double v16;
  double v24;
};

const GeometryConstants& constants();

/// Volume of the ideal tetrahedron with dihedral angles x, y, z
/// (x + y + z = pi within 1e-9, each in [0, pi]); throws AngleSum otherwise.
double tet_volume(double x, double y, double z);

/// Volume of the regular ideal n-bipyramid, n >= 3.
double bipyramid_volume(int n);

struct VolumeTerm {
  long long coeff = 0;
  std::string constant;  // "v_tet", "v_oct", "v16", "v24"
};

struct VolumeReport {
  std::vector<VolumeTerm> terms;
  double value = 0;
  Census census;
  bool bigons = false;
  int crossings = 0;
  /// value / crossings, or 0 when no crossing count was given.
  double density = 0;

  std::string formula() const;
};

double constant_value(const std::string& name);

/// Closed-form volume of a semi-regular link from its T_L face census.
/// Throws Unsupported for face degrees outside the semi-regular cases.
VolumeReport exact_volume(const Census& census, bool bigons, int crossings = 0);

/// vol◊: regular bipyramid volume summed over the faces of T_L.
double vol_bipyramid_bound(const TilingGraph& t);

double density(double volume, int crossings);

}  // namespace torihedra
