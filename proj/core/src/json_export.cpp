#include "torihedra/json_export.hpp"

#include <cstdio>
#include <cstdlib>

namespace torihedra {

namespace {

const char* apex_name(Apex a) {
  switch (a) {
    case Apex::Top: return "+inf";
    case Apex::Bottom: return "-inf";
    case Apex::None: break;
  }
  return "";
}

const char* tet_kind_name(TetKind k) {
  switch (k) {
    case TetKind::Stellated: return "stellated";
    case TetKind::TriangleTop: return "triangle_top";
    case TetKind::TriangleBottom: return "triangle_bottom";
  }
  return "";
}

Json vertex_label(const TetVertex& v) {
  if (v.apex != Apex::None) return apex_name(v.apex);
  return Json{{"face", v.face}, {"equator", v.equator}};
}

}  // namespace

double report_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::strtod(buf, nullptr);
}

Json json_of(Complex z) { return Json::array({report_number(z.real()), report_number(z.imag())}); }

Json json_of(const IdealTriangulation& t) {
  Json tets = Json::array();
  for (int i = 0; i < t.size(); ++i) {
    const Tetrahedron& T = t.tetrahedra()[i];
    Json vertices = Json::array();
    for (const TetVertex& v : T.vertices) vertices.push_back(vertex_label(v));
    Json faces = Json::array();
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = T.glue[f];
      faces.push_back({{"face", f},
                       {"tet", g.tet},
                       {"tet_face", g.perm[f]},
                       {"perm", {g.perm[0], g.perm[1], g.perm[2], g.perm[3]}}});
    }
    tets.push_back({{"index", i},
                    {"kind", tet_kind_name(T.kind)},
                    {"face", T.face},
                    {"position", T.position},
                    {"vertices", vertices},
                    {"gluings", faces}});
  }
  Json classes = Json::array();
  for (int c = 0; c < static_cast<int>(t.edge_classes().size()); ++c) {
    const EdgeClass& cls = t.edge_classes()[c];
    Json members = Json::array();
    for (const EdgeMember& m : cls.members) members.push_back({m.tet, m.edge});
    Json row{{"index", c}, {"kind", to_string(cls.kind)}, {"degree", cls.degree()}, {"members", members}};
    if (cls.kind == EdgeKind::Stellating) row["face"] = cls.face;
    if (cls.kind == EdgeKind::Vertical) {
      row["vertex"] = t.tiling().id(cls.vertex);
      row["apex"] = apex_name(cls.apex);
    }
    if (cls.kind == EdgeKind::Horizontal) {
      Json ids = Json::array();
      for (int v : cls.crossings) ids.push_back(t.tiling().id(v));
      row["crossings"] = ids;
    }
    classes.push_back(row);
  }
  return {{"kind", t.prime() ? "three_two" : "stellated"},
          {"tetrahedra_count", t.size()},
          {"cusps", t.cusp_count()},
          {"tetrahedra", tets},
          {"edge_classes", classes}};
}

Json json_of(const Census& c) {
  return {{"triangles", c.triangles}, {"squares", c.squares},       {"hexagons", c.hexagons},
          {"octagons", c.octagons},   {"dodecagons", c.dodecagons}, {"other", c.other}};
}

Json json_of(const VolumeReport& r) {
  Json terms = Json::array();
  for (const VolumeTerm& t : r.terms) terms.push_back({{"coeff", t.coeff}, {"constant_name", t.constant}});
  return {{"terms", terms},
          {"formula", r.formula()},
          {"value", report_number(r.value)},
          {"census", json_of(r.census)},
          {"bigons", r.bigons},
          {"crossings", r.crossings},
          {"density", report_number(r.density)}};
}

Json json_of(const TraceFieldClass& f) {
  return {{"label", f.label}, {"arithmetic", f.arithmetic}, {"note", f.note}};
}

Json json_of(const CommensurabilityVerdict& v) {
  return {{"p1", v.p1}, {"q1", v.q1},         {"p2", v.p2},
          {"q2", v.q2}, {"determinant", v.determinant}, {"incommensurable", v.incommensurable},
          {"verdict", v.verdict}};
}

Json json_of(const DiskCut& c) {
  return {{"cut_size", c.cut_size}, {"edges", c.edges}, {"inside", c.inside}, {"interior_edges", c.interior_edges}};
}

Json json_of(const CutReport& r) {
  Json j{{"cut_size", r.cut_size}, {"passed", r.passed}, {"reason", r.reason}, {"window", r.window},
         {"cuts_found", r.cuts.size()}};
  if (!r.passed) j["witness"] = json_of(r.witness);
  return j;
}

Json json_of(const BsVerdict& v) {
  Json j{{"passed", v.passed}, {"reason", v.reason}, {"window", v.window}};
  if (v.witness) j["witness"] = json_of(*v.witness);
  return j;
}

Json json_of(const RadiiSolution& r) {
  Json radii = Json::array();
  for (double x : r.radii) radii.push_back(report_number(x));
  return {{"radii", radii}, {"iterations", r.iterations}, {"residual", r.residual}, {"definite", r.definite}};
}

Json json_of(const CirclePattern& p) {
  Json centers = Json::array();
  for (Complex c : p.centers) centers.push_back(json_of(c));
  Json vertices = Json::array();
  for (Complex v : p.vertices) vertices.push_back(json_of(v));
  Json radii = Json::array();
  for (double r : p.radii) radii.push_back(report_number(r));
  return {{"radii", radii},
          {"centers", centers},
          {"vertices", vertices},
          {"t1", json_of(p.t1)},
          {"t2", json_of(p.t2)},
          {"residuals",
           {{"layout", p.layout_residual},
            {"circle", p.circle_residual},
            {"orthogonality", p.orthogonality_residual},
            {"closing", p.closing_residual}}}};
}

Json json_of(const GluingReport& r) {
  Json violations = Json::array();
  for (const ClassResidual& c : r.violations) {
    Json row{{"edge_class", c.edge_class}, {"kind", to_string(c.kind)}, {"residual", c.residual}};
    if (c.apex != Apex::None) row["apex"] = apex_name(c.apex);
    violations.push_back(row);
  }
  return {{"ok", r.ok},
          {"tol", r.tol},
          {"max_residual", r.max_residual},
          {"tet_residual", r.tet_residual},
          {"unimodular_residual", r.unimodular_residual},
          {"min_imaginary", report_number(r.min_imaginary)},
          {"classes", r.classes.size()},
          {"violations", violations}};
}

Json json_of(const VolumeBounds& b) {
  return {{"vol_perp", report_number(b.vol_perp)},
          {"vol_perp_kites", report_number(b.vol_perp_kites)},
          {"vol_estimate", b.vol_estimate ? Json(report_number(*b.vol_estimate)) : Json(nullptr)},
          {"vol_maximized", report_number(b.vol_maximized)},
          {"vol_diamond", report_number(b.vol_diamond)},
          {"boundary_flag", b.boundary_flag},
          {"ordered", b.ordered},
          {"equality_flag", b.equality_flag},
          {"equality_tol", b.equality_tol}};
}

Json json_of(const VolumeMaximum& m) {
  return {{"volume", report_number(m.volume)},
          {"boundary_flag", m.boundary_flag},
          {"kkt_residual", m.kkt_residual},
          {"iterations", m.iterations}};
}

}  // namespace torihedra
