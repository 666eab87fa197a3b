#pragma once

#include <nlohmann/json.hpp>

#include "torihedra/angle_structure.hpp"
#include "torihedra/arithmetic.hpp"
#include "torihedra/circle_pattern.hpp"
#include "torihedra/cuts.hpp"
#include "torihedra/triangulation.hpp"
#include "torihedra/volume.hpp"

namespace torihedra {

using Json = nlohmann::ordered_json;

/// Rounds to 10 significant digits for reports.
double report_number(double x);

Json json_of(const IdealTriangulation& t);
Json json_of(const Census& c);
Json json_of(const VolumeReport& r);
Json json_of(const TraceFieldClass& f);
Json json_of(const CommensurabilityVerdict& v);
Json json_of(const DiskCut& c);
Json json_of(const CutReport& r);
Json json_of(const BsVerdict& v);
Json json_of(const RadiiSolution& r);
Json json_of(const CirclePattern& p);
Json json_of(const GluingReport& r);
Json json_of(const VolumeBounds& b);
Json json_of(const VolumeMaximum& m);
Json json_of(Complex z);

}  // namespace torihedra
