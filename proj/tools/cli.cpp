#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "torihedra/angle_structure.hpp"
#include "torihedra/arithmetic.hpp"
#include "torihedra/catalog.hpp"
#include "torihedra/circle_pattern.hpp"
#include "torihedra/cuts.hpp"
#include "torihedra/errors.hpp"
#include "torihedra/json_export.hpp"
#include "torihedra/svg.hpp"
#include "torihedra/tiling.hpp"
#include "torihedra/triangulation.hpp"
#include "torihedra/volume.hpp"

#ifndef TORIHEDRA_VERSION
#define TORIHEDRA_VERSION "0.0.0"
#endif

namespace torihedra::cli {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.10g %c %.10gi", z.real(), z.imag() < 0 ? '-' : '+', std::abs(z.imag()));
  return buf;
}

bool json_mode(const RunConfig& c) { return c.format == "json"; }

Json meta(const RunConfig& c) {
  return {{"tool", "torihedra"},
          {"version", TORIHEDRA_VERSION},
          {"subcommand", c.subcommand},
          {"inputs", c.inputs},
          {"window", c.window},
          {"tolerances", {{"newton", c.tol_newton}, {"gluing", c.tol_gluing}, {"equality", c.tol_equality}}}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_tolerances(const RunConfig& c, std::ostream& out) {
  out << "tolerances: newton " << fmt(c.tol_newton) << ", gluing " << fmt(c.tol_gluing) << ", equality "
      << fmt(c.tol_equality) << "\n";
}

std::string census_text(const Census& c) {
  std::ostringstream s;
  s << "T=" << c.triangles << " S=" << c.squares << " H=" << c.hexagons << " Omega=" << c.octagons
    << " D=" << c.dodecagons;
  if (c.other) s << " other=" << c.other;
  return s.str();
}

std::string cut_text(const DiskCut& c) {
  std::ostringstream s;
  s << c.cut_size << "-edge cut through edges [";
  for (std::size_t i = 0; i < c.edges.size(); ++i) s << (i ? " " : "") << c.edges[i];
  s << "] enclosing crossings [";
  for (std::size_t i = 0; i < c.inside.size(); ++i) s << (i ? " " : "") << c.inside[i];
  s << "]";
  return s.str();
}

// Renders a domain failure and returns the exit code.
int report_error(const RunConfig& c, const Error& e, std::ostream& out) {
  if (json_mode(c)) {
    Json j{{"meta", meta(c)}, {"ok", false}, {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    emit(out, j);
  } else {
    out << "error: " << e.what() << "\n";
  }
  return e.kind() == ErrorKind::Io ? kUsage : kDomainFailure;
}

bool semi_regular(const TilingGraph& t) { return classify_vertices(t).semi_regular; }

}  // namespace

TorusDiagram load_input(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_diagram(text);
  }
  if (spec.starts_with("catalog:")) return catalog_link(spec);
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream file(spec);
    if (!file) throw Error(ErrorKind::Io, "cannot read " + spec);
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    return parse_diagram(text);
  }
  if (is_catalog_name(spec)) return catalog_link(spec);
  throw Error(ErrorKind::Io, "no such file or catalog entry: " + spec);
}

int cmd_validate(const RunConfig& c, std::istream& in, std::ostream& out) {
  const std::string& input = c.inputs.at(0);
  Json j{{"meta", meta(c)}};
  try {
    const TorusDiagram d = load_input(input, in);
    const FaceTrace faces = trace_faces(d);
    const CutReport wp = is_weakly_prime(d, c.window);
    const CutReport ct = has_cycle_of_tangles(d, c.window);
    const bool ok = wp.passed && ct.passed;
    if (json_mode(c)) {
      j["ok"] = ok;
      j["crossings"] = d.crossing_count();
      j["faces"] = faces.faces.size();
      j["reduced_alternating"] = true;
      j["weakly_prime"] = json_of(wp);
      j["no_cycle_of_tangles"] = json_of(ct);
      emit(out, j);
    } else {
      out << "input: " << input << "\n";
      out << "crossings: " << d.crossing_count() << ", faces: " << faces.faces.size() << "\n";
      out << "reduced alternating: pass\n";
      out << "window: " << c.window << "\n";
      out << "weakly prime: " << (wp.passed ? "pass" : "fail: " + wp.reason) << "\n";
      if (!wp.passed) out << "  witness: " << cut_text(wp.witness) << "\n";
      out << "no cycle of tangles: " << (ct.passed ? "pass" : "fail: " + ct.reason) << "\n";
      if (!ct.passed) out << "  witness: " << cut_text(ct.witness) << "\n";
      out << "verdict: " << (ok ? "pass" : "fail") << "\n";
    }
    return ok ? kOk : kDomainFailure;
  } catch (const Error& e) {
    return report_error(c, e, out);
  }
}

int cmd_volume(const RunConfig& c, std::istream& in, std::ostream& out) {
  try {
    const TorusDiagram d = load_input(c.inputs.at(0), in);
    const TilingGraph t = collapse_bigons(d);
    Json j{{"meta", meta(c)}, {"ok", true}};
    std::ostringstream text;
    text << "input: " << c.inputs.at(0) << "\n";
    if (semi_regular(t)) {
      const VolumeReport r = exact_volume(t.census(), t.has_bigons(), d.crossing_count());
      j["path"] = "exact";
      j["volume"] = json_of(r);
      text << "path: exact (semi-regular)\n";
      text << "census: " << census_text(r.census) << "\n";
      text << "volume: " << r.formula() << " = " << fmt(r.value) << "\n";
      text << "crossings: " << r.crossings << "\n";
      text << "density: " << fmt(r.density) << "\n";
      if (!t.has_bigons()) {
        const TraceFieldClass f = classify_field(t.census());
        j["field"] = json_of(f);
        text << "field: " << f.label << " (" << f.note << ")\n";
      }
      if (c.bounds) {
        const BsVerdict bs = check_bs_condition(d, c.window);
        if (bs.passed) {
          const VolumeBounds b = volume_bounds(d, c.tol_newton, c.tol_gluing, c.tol_equality);
          j["bounds"] = json_of(b);
          text << "bounds: vol_perp " << fmt(b.vol_perp) << " <= vol_estimate " << fmt(b.vol_maximized)
               << " <= vol_diamond " << fmt(b.vol_diamond) << (b.equality_flag ? " (all equal)" : "") << "\n";
        } else {
          j["bounds"] = json_of(bs);
          text << "bounds: unavailable, " << bs.reason << "\n";
        }
      }
    } else {
      const BsVerdict bs = check_bs_condition(d, c.window);
      if (!bs.passed) {
        if (json_mode(c)) {
          j["ok"] = false;
          j["path"] = "maximize";
          j["bs_condition"] = json_of(bs);
          emit(out, j);
        } else {
          out << text.str() << "error: no orthogonal circle pattern: " << bs.reason << "\n";
          if (bs.witness) out << "  witness: " << cut_text(*bs.witness) << "\n";
        }
        return kDomainFailure;
      }
      const VolumeBounds b = volume_bounds(d, c.tol_newton, c.tol_gluing, c.tol_equality);
      j["path"] = "maximize";
      j["bounds"] = json_of(b);
      j["density"] = report_number(density(b.vol_maximized, d.crossing_count()));
      text << "path: angle-structure maximization\n";
      text << "census: " << census_text(t.census()) << "\n";
      text << "volume (Casson-Rivin value): " << fmt(b.vol_maximized)
           << (b.boundary_flag ? " (maximizer on the boundary)" : "") << "\n";
      text << "crossings: " << d.crossing_count() << "\n";
      text << "density: " << fmt(density(b.vol_maximized, d.crossing_count())) << "\n";
      text << "bounds: vol_perp " << fmt(b.vol_perp) << " <= vol_diamond " << fmt(b.vol_diamond) << "\n";
    }
    if (json_mode(c)) {
      emit(out, j);
    } else {
      out << text.str();
      print_tolerances(c, out);
    }
    return kOk;
  } catch (const Error& e) {
    return report_error(c, e, out);
  }
}

int cmd_pattern(const RunConfig& c, std::istream& in, std::ostream& out) {
  try {
    const TorusDiagram d = load_input(c.inputs.at(0), in);
    const BsVerdict bs = check_bs_condition(d, c.window);
    if (!bs.passed) {
      if (json_mode(c)) {
        emit(out, {{"meta", meta(c)}, {"ok", false}, {"bs_condition", json_of(bs)}});
      } else {
        out << "error: no orthogonal circle pattern: " << bs.reason << "\n";
        if (bs.witness) out << "  witness: " << cut_text(*bs.witness) << "\n";
      }
      return kDomainFailure;
    }
    const RadiiSolution radii = solve_radii(d, c.tol_newton);
    const CirclePattern p = layout(d, radii.radii, c.tol_gluing);
    const IdealTriangulation stellated = stellate(d);
    const ShapeAssignment shapes = shape_parameters(p, stellated);
    const GluingReport glue = verify_gluing(stellated, shapes, c.tol_gluing);
    const VolumeBounds b = volume_bounds(p, stellated, three_two_moves(stellated), c.tol_equality);
    const Complex tau = cusp_shape_top(p);
    if (!c.svg.empty()) {
      std::ofstream file(c.svg);
      if (!file) throw Error(ErrorKind::Io, "cannot write " + c.svg);
      file << pattern_svg(p);
    }
    if (json_mode(c)) {
      emit(out, {{"meta", meta(c)},
                 {"ok", true},
                 {"solver", json_of(radii)},
                 {"pattern", json_of(p)},
                 {"tau", json_of(tau)},
                 {"gluing", json_of(glue)},
                 {"bounds", json_of(b)}});
      return kOk;
    }
    out << "input: " << c.inputs.at(0) << "\n";
    out << "radii:";
    for (double r : radii.radii) out << " " << fmt(r);
    out << "\n";
    out << "newton: " << radii.iterations << " iterations, residual " << fmt(radii.residual) << "\n";
    out << "layout residual: " << fmt(p.layout_residual) << ", orthogonality " << fmt(p.orthogonality_residual)
        << "\n";
    out << "t1: " << fmt(p.t1) << ", t2: " << fmt(p.t2) << "\n";
    out << "tau: " << fmt(tau) << "\n";
    out << "gluing: " << (glue.ok ? "pass" : "fail") << ", max class residual " << fmt(glue.max_residual)
        << ", unimodular residual " << fmt(glue.unimodular_residual) << ", min Im z " << fmt(glue.min_imaginary)
        << "\n";
    for (const ClassResidual& v : glue.violations)
      out << "  edge class " << v.edge_class << " (" << to_string(v.kind)
          << (v.apex == Apex::Bottom ? ", -inf" : v.apex == Apex::Top ? ", +inf" : "") << "): residual "
          << fmt(v.residual) << "\n";
    out << "vol_perp: " << fmt(b.vol_perp) << "\n";
    out << "vol_estimate: " << (b.vol_estimate ? fmt(*b.vol_estimate) : "boundary maximizer") << "\n";
    out << "vol_diamond: " << fmt(b.vol_diamond) << "\n";
    out << "equality_flag: " << (b.equality_flag ? "set" : "unset") << "\n";
    if (!c.svg.empty()) out << "svg: " << c.svg << "\n";
    print_tolerances(c, out);
    return kOk;
  } catch (const Error& e) {
    return report_error(c, e, out);
  }
}

int cmd_compare(const RunConfig& c, std::istream& in, std::ostream& out) {
  try {
    std::vector<Census> censuses;
    std::vector<TraceFieldClass> fields;
    for (const std::string& input : c.inputs) {
      const TilingGraph t = collapse_bigons(load_input(input, in));
      if (t.has_bigons()) throw Error(ErrorKind::Unsupported, input + " has bigons");
      const VertexClassification cls = classify_vertices(t);
      if (!cls.semi_regular) throw Error(ErrorKind::NotSemiRegular, input + ": " + cls.reason);
      censuses.push_back(t.census());
      fields.push_back(classify_field(t.census()));
    }
    const CommensurabilityVerdict v = incommensurable(censuses[0], censuses[1]);
    if (json_mode(c)) {
      Json inputs = Json::array();
      for (std::size_t i = 0; i < 2; ++i)
        inputs.push_back({{"input", c.inputs[i]}, {"census", json_of(censuses[i])}, {"field", json_of(fields[i])}});
      emit(out, {{"meta", meta(c)}, {"ok", true}, {"inputs", inputs}, {"comparison", json_of(v)}});
      return kOk;
    }
    for (std::size_t i = 0; i < 2; ++i)
      out << c.inputs[i] << ": " << census_text(censuses[i]) << ", field " << fields[i].label << " ("
          << fields[i].note << ")\n";
    out << "volumes: " << v.p1 << "*v_tet + " << v.q1 << "*v_oct vs " << v.p2 << "*v_tet + " << v.q2 << "*v_oct\n";
    out << "determinant: " << v.determinant << "\n";
    out << "verdict: " << v.verdict << "\n";
    return kOk;
  } catch (const Error& e) {
    return report_error(c, e, out);
  }
}

int cmd_triangulate(const RunConfig& c, std::istream& in, std::ostream& out) {
  try {
    const TorusDiagram d = load_input(c.inputs.at(0), in);
    const IdealTriangulation stellated = stellate(d);
    const IdealTriangulation prime = three_two_moves(stellated);
    edge_census(stellated);
    edge_census(prime);
    emit(out, {{"meta", meta(c)}, {"ok", true}, {"stellated", json_of(stellated)}, {"three_two", json_of(prime)}});
    return kOk;
  } catch (const Error& e) {
    return report_error(c, e, out);
  }
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  if (json_mode(c)) {
    Json entries = Json::array();
    for (const CatalogEntry& e : catalog_entries())
      entries.push_back({{"name", e.name}, {"vertex_types", e.vertex_types}, {"description", e.description}});
    emit(out, {{"meta", meta(c)}, {"ok", true}, {"entries", entries}});
    return kOk;
  }
  for (const CatalogEntry& e : catalog_entries()) out << e.name << "\t" << e.vertex_types << "\t" << e.description << "\n";
  return kOk;
}

int cmd_export(const RunConfig& c, std::istream& in, std::ostream& out) {
  try {
    out << serialize(load_input(c.inputs.at(0), in));
    return kOk;
  } catch (const Error& e) {
    return report_error(c, e, out);
  }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volumes, triangulations and circle patterns of biperiodic alternating links", "torihedra"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--window", config.window, "Translate window for disk-cut search")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    sub->add_option("--tol-newton", config.tol_newton, "Circle-pattern Newton tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--tol-gluing", config.tol_gluing, "Gluing and layout tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--tol-equality", config.tol_equality, "Volume equality tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("-o,--output", config.output, "Write the report to a file");
  };

  struct Spec {
    const char* name;
    const char* help;
    int inputs;
  };
  const Spec specs[] = {{"validate", "Check a diagram", 1},
                        {"volume", "Volume report", 1},
                        {"pattern", "Orthogonal circle pattern and volume bounds", 1},
                        {"compare", "Commensurability of two semi-regular links", 2},
                        {"triangulate", "Emit the stellated and 3-2 moved triangulations as JSON", 1},
                        {"catalog", "List built-in links", 0},
                        {"export", "Emit TLD", 1}};
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    if (s.inputs > 0)
      sub->add_option("input", config.inputs, s.inputs == 1 ? "File, '-', or catalog name" : "Two inputs")
          ->required()
          ->expected(s.inputs);
    if (std::string(s.name) == "pattern") sub->add_option("--svg", config.svg, "Write an SVG drawing");
    if (std::string(s.name) == "volume")
      sub->add_flag("--bounds", config.bounds, "Add circle-pattern bounds on the exact path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      err << "cannot write " << config.output << "\n";
      return kUsage;
    }
    sink = &file;
  }
  try {
    const std::string& s = config.subcommand;
    if (s == "validate") return cmd_validate(config, in, *sink);
    if (s == "volume") return cmd_volume(config, in, *sink);
    if (s == "pattern") return cmd_pattern(config, in, *sink);
    if (s == "compare") return cmd_compare(config, in, *sink);
    if (s == "triangulate") return cmd_triangulate(config, in, *sink);
    if (s == "catalog") return cmd_catalog(config, *sink);
    if (s == "export") return cmd_export(config, in, *sink);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace torihedra::cli
