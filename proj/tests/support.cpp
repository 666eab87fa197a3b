#include "support.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "torihedra/catalog.hpp"
#include "torihedra/circle_pattern.hpp"
#include "torihedra/embedding.hpp"
#include "torihedra/errors.hpp"
#include "torihedra/lobachevsky.hpp"
#include "torihedra/tiling.hpp"
#include "torihedra/triangulation.hpp"

namespace torihedra::testing {

namespace {

constexpr double kPi = std::numbers::pi;

// Square weave ends of crossing 0, by slot: the far endpoint slot on
// crossing 1 and the holonomy from crossing 0.
constexpr int kFarSlot[4] = {2, 3, 0, 1};
constexpr Offset kFarHolonomy[4] = {{0, 0}, {0, -1}, {-1, -1}, {-1, 0}};

struct Relabeling {
  std::vector<int> ids;
  std::vector<int> rotation;
  std::vector<Offset> shift;
  std::vector<EdgeSpec> edges;
  std::vector<int> edge_image;  // old edge index -> new edge index
};

Relabeling relabel_map(const PeriodicMap& m, std::mt19937_64& rng) {
  const int n = m.vertex_count();
  Relabeling r;
  std::vector<int> pool(4 * n + 8);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  r.ids.assign(pool.begin(), pool.begin() + n);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int v = 0; v < n; ++v) {
    r.rotation.push_back(std::uniform_int_distribution<int>(0, m.degree(v) - 1)(rng));
    r.shift.push_back({small(rng), small(rng)});
  }
  std::vector<int> order(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  r.edge_image.assign(m.edge_count(), 0);
  for (int i = 0; i < m.edge_count(); ++i) {
    const EdgeSpec& old = m.edges()[order[i]];
    EdgeSpec e;
    e.vertex_a = old.vertex_a;
    e.vertex_b = old.vertex_b;
    e.slot_a = (old.slot_a + r.rotation[old.vertex_a]) % m.degree(old.vertex_a);
    e.slot_b = (old.slot_b + r.rotation[old.vertex_b]) % m.degree(old.vertex_b);
    e.holonomy = old.holonomy + r.shift[old.vertex_a] - r.shift[old.vertex_b];
    if (rng() & 1u) {
      std::swap(e.vertex_a, e.vertex_b);
      std::swap(e.slot_a, e.slot_b);
      e.holonomy = -e.holonomy;
    }
    r.edges.push_back(e);
    r.edge_image[order[i]] = i;
  }
  return r;
}

std::string describe_seed(const std::string& what, std::uint64_t s, int index) {
  std::ostringstream out;
  out << what << " (seed " << s << ", case " << index << ")";
  return out.str();
}

}  // namespace

std::uint64_t seed() {
  static const std::uint64_t value = [] {
    std::uint64_t s = 0;
    if (const char* env = std::getenv("TORIHEDRA_SEED")) {
      s = std::strtoull(env, nullptr, 10);
    } else {
      std::random_device rd;
      s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    std::cout << "[seed] TORIHEDRA_SEED=" << s << std::endl;
    return s;
  }();
  return value;
}

const char* const kSquareWeaveTld = R"(tld 1
# square weave, slots E N W S
crossing 0 over 0
crossing 1 over 1
edge 0.0 1.2 0 0
edge 0.2 1.0 -1 -1
edge 0.1 1.3 0 -1
edge 0.3 1.1 -1 0
)";

TorusDiagram wheel_diagram() {
  // index 0 keeps crossing 1 of the weave; 1..4 rims, 5 hub
  std::vector<int> ids{1, 10, 11, 12, 13, 20};
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < 4; ++i) {
    const int rim = 1 + i;
    const int next = 1 + (i + 1) % 4;
    edges.push_back({rim, 0, 0, kFarSlot[i], kFarHolonomy[i]});
    edges.push_back({rim, 1, next, 3, {}});
    edges.push_back({rim, 2, 5, i, {}});
  }
  return make_alternating(ids, edges);
}

TorusDiagram twist_chain_diagram(int k) {
  std::vector<int> ids{1};
  for (int j = 0; j < k; ++j) ids.push_back(10 + j);
  std::vector<EdgeSpec> edges;
  for (int j = 1; j < k; ++j) {
    edges.push_back({j, 0, j + 1, 1, {}});
    edges.push_back({j, 3, j + 1, 2, {}});
  }
  edges.push_back({1, 1, 0, kFarSlot[1], kFarHolonomy[1]});
  edges.push_back({1, 2, 0, kFarSlot[2], kFarHolonomy[2]});
  edges.push_back({k, 0, 0, kFarSlot[0], kFarHolonomy[0]});
  edges.push_back({k, 3, 0, kFarSlot[3], kFarHolonomy[3]});
  return make_alternating(ids, edges);
}

TorusDiagram connected_sum_diagram() {
  std::vector<int> ids{0, 1, 2, 3, 4};
  std::vector<EdgeSpec> edges{
      {0, 1, 1, 3, {0, -1}}, {0, 2, 1, 0, {-1, -1}}, {0, 3, 1, 1, {-1, 0}},
      {2, 3, 3, 2, {}},      {3, 3, 4, 2, {}},       {4, 3, 2, 2, {}},
      {2, 0, 3, 1, {}},      {3, 0, 4, 1, {}},       {0, 0, 2, 1, {}},
      {4, 0, 1, 2, {}}};
  return make_alternating(ids, edges);
}

TilingGraph dodecagon_witness_tiling() {
  const double d = 2 + std::sqrt(3.0);
  return build_periodic_tiling({d, 0}, {0, d}, regular_polygon(12, 0, kPi / 12));
}

TilingGraph isolated_three_valent_tiling() {
  std::vector<std::complex<double>> points;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) points.emplace_back(i, j);
  return build_periodic_tiling({3, 0}, {0, 3}, points, {{0, 0.5}});
}

double lobachevsky_oracle(double theta) {
  if (theta == 0) return 0;
  static boost::math::quadrature::tanh_sinh<double> integrator;
  // -log(2 sin t) = -log 2 - log t - log(pi - t) - log(sin t / (t (pi - t))); the last term is smooth
  auto smooth = [](double t) -> double {
    const double s = t < kPi / 2 ? std::sin(t) : std::sin(kPi - t);
    return -std::log(s / (t * (kPi - t)));
  };
  auto xlogx = [](double x) { return x > 0 ? x * std::log(x) : 0.0; };
  const double singular = -theta * std::log(2.0) + (theta - xlogx(theta)) + (xlogx(kPi - theta) - xlogx(kPi) + theta);
  return singular + integrator.integrate(smooth, 0.0, theta);
}

PropertyResult lobachevsky_property(std::uint64_t s, int cases, double tol) {
  PropertyResult r{"lobachevsky", s};
  std::mt19937_64 rng(s);
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_int_distribution<int> period(-20, 20);
  for (int i = 0; i < cases; ++i) {
    const double theta = kPi * (i + unit(rng)) / cases;
    const double expected = lobachevsky_oracle(theta);
    const int k = period(rng);
    const double errors[3] = {std::abs(lobachevsky(theta) - expected),
                              std::abs(lobachevsky(-theta) + expected),
                              std::abs(lobachevsky(theta + k * kPi) - expected)};
    const double err = *std::max_element(std::begin(errors), std::end(errors));
    r.max_error = std::max(r.max_error, err);
    ++r.cases;
    if (!(err <= tol)) {
      if (r.failures++ == 0) r.first_failure = describe_seed("theta " + std::to_string(theta), s, i);
    }
  }
  return r;
}

PropertyResult triangle_product_property(std::uint64_t s, int cases, double tol) {
  PropertyResult r{"edge parameter product", s};
  std::mt19937_64 rng(s);
  std::uniform_real_distribution<double> unit(1e-3, 1);
  for (int i = 0; i < cases; ++i) {
    const double a = unit(rng), b = unit(rng), c = unit(rng);
    const double total = a + b + c;
    const double alpha = kPi * a / total, beta = kPi * b / total, gamma = kPi * c / total;
    const Complex product = edge_parameter(alpha, beta, gamma) * edge_parameter(beta, gamma, alpha) *
                            edge_parameter(gamma, alpha, beta);
    const double err = std::abs(product + 1.0);
    r.max_error = std::max(r.max_error, err);
    ++r.cases;
    if (!(err <= tol) && r.failures++ == 0) r.first_failure = describe_seed("triangle", s, i);
  }
  return r;
}

TorusDiagram relabel(const TorusDiagram& d, std::mt19937_64& rng) {
  const Relabeling r = relabel_map(d.map(), rng);
  std::vector<int> over(d.crossing_count());
  for (int v = 0; v < d.crossing_count(); ++v) over[v] = (d.over(v) + r.rotation[v]) % 2;
  return TorusDiagram::create(r.ids, over, r.edges, d.lattice());
}

PropertyResult diagram_roundtrip_property(std::uint64_t s, int cases) {
  PropertyResult r{"parse/serialize roundtrip", s};
  std::mt19937_64 rng(s);
  std::vector<TorusDiagram> pool;
  for (const CatalogEntry& e : catalog_entries()) pool.push_back(catalog_link(e.name));
  pool.push_back(wheel_diagram());
  pool.push_back(twist_chain_diagram(3));
  pool.push_back(connected_sum_diagram());
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < cases; ++i) {
    const TorusDiagram& base = pool[pick(rng)];
    ++r.cases;
    try {
      const TorusDiagram d = relabel(base, rng);
      const std::string text = serialize(d);
      const TorusDiagram back = parse_diagram(text);
      const bool same_text = serialize(back) == text;
      const bool same_map = canonical_code(back.map()) == canonical_code(base.map());
      bool same_over = true;
      for (int v = 0; v < d.crossing_count(); ++v) {
        const int w = back.index_of_id(d.id(v));
        same_over = same_over && back.over(w) == d.over(v);
      }
      if (!(same_text && same_map && same_over) && r.failures++ == 0)
        r.first_failure = describe_seed("roundtrip mismatch", s, i);
    } catch (const std::exception& ex) {
      if (r.failures++ == 0) r.first_failure = describe_seed(ex.what(), s, i);
    }
  }
  return r;
}

PropertyResult bigon_roundtrip_property(std::uint64_t s, int cases) {
  PropertyResult r{"collapse/realize roundtrip", s};
  std::mt19937_64 rng(s);
  struct Source {
    TilingGraph tiling;
    std::vector<std::vector<int>> matchings;
  };
  std::vector<Source> sources;
  for (const CatalogEntry& e : catalog_entries()) {
    Source src{catalog_tiling(e.name), {}};
    for (const auto& m : perfect_matchings(src.tiling, 256)) {
      try {
        realize_link(src.tiling, m);
        src.matchings.push_back(m);
      } catch (const Error&) {
      }
      if (src.matchings.size() >= 16) break;
    }
    if (!src.matchings.empty()) sources.push_back(std::move(src));
  }
  std::uniform_int_distribution<std::size_t> pick(0, sources.size() - 1);
  for (int i = 0; i < cases; ++i) {
    const Source& src = sources[pick(rng)];
    const auto& matching =
        src.matchings[std::uniform_int_distribution<std::size_t>(0, src.matchings.size() - 1)(rng)];
    ++r.cases;
    try {
      const Relabeling rl = relabel_map(src.tiling.map(), rng);
      const TilingGraph t(PeriodicMap(src.tiling.map().degrees(), rl.edges), rl.ids);
      std::vector<int> image;
      for (int e : matching) image.push_back(rl.edge_image[e]);
      std::sort(image.begin(), image.end());

      TilingGraph expected = src.tiling;
      std::vector<int> counts(expected.edge_count(), 0);
      for (int e : matching) counts[e] = 1;
      expected.set_bigons(counts);

      const TilingGraph collapsed = collapse_bigons(realize_link(t, image));
      if (canonical_code(collapsed) != canonical_code(expected) && r.failures++ == 0)
        r.first_failure = describe_seed("collapsed map differs", s, i);
    } catch (const std::exception& ex) {
      if (r.failures++ == 0) r.first_failure = describe_seed(ex.what(), s, i);
    }
  }
  return r;
}

PropertyResult similarity_property(std::uint64_t s, int cases, double tol) {
  PropertyResult r{"circle pattern similarity", s};
  std::mt19937_64 rng(s);
  struct Source {
    TorusDiagram diagram;
    std::vector<double> radii;
    IdealTriangulation stellated;
    ShapeAssignment shapes;
    GluingReport report;
    double vol_perp;
  };
  std::vector<Source> sources;
  for (const char* name : {"square-weave", "triaxial", "3.4.6.4", "3.3.6.6", "3.4.4.6", "Lj:1"}) {
    TorusDiagram d = catalog_link(name);
    const RadiiSolution sol = solve_radii(d);
    IdealTriangulation st = stellate(d);
    const CirclePattern p = layout(d, sol.radii);
    ShapeAssignment sh = shape_parameters(p, st);
    GluingReport rep = verify_gluing(st, sh);
    const double vp = shape_volume(sh);
    sources.push_back({std::move(d), sol.radii, std::move(st), std::move(sh), std::move(rep), vp});
  }
  std::uniform_int_distribution<std::size_t> pick(0, sources.size() - 1);
  std::uniform_real_distribution<double> log_scale(-4, 4);
  for (int i = 0; i < cases; ++i) {
    const Source& src = sources[pick(rng)];
    const double c = std::exp(log_scale(rng));
    ++r.cases;
    try {
      std::vector<double> scaled = src.radii;
      for (double& x : scaled) x *= c;
      const CirclePattern p = layout(src.diagram, scaled);
      const ShapeAssignment sh = shape_parameters(p, src.stellated);
      const GluingReport rep = verify_gluing(src.stellated, sh);
      double err = std::abs(shape_volume(sh) - src.vol_perp);
      for (std::size_t t = 0; t < sh.z.size(); ++t)
        for (int k = 0; k < 3; ++k) err = std::max(err, std::abs(sh.z[t][k] - src.shapes.z[t][k]));
      bool same_verdict = rep.ok == src.report.ok && rep.violations.size() == src.report.violations.size();
      for (std::size_t k = 0; same_verdict && k < rep.violations.size(); ++k)
        same_verdict = rep.violations[k].edge_class == src.report.violations[k].edge_class;
      r.max_error = std::max(r.max_error, err);
      if (!(err <= tol && same_verdict) && r.failures++ == 0)
        r.first_failure = describe_seed("scale " + std::to_string(c), s, i);
    } catch (const std::exception& ex) {
      if (r.failures++ == 0) r.first_failure = describe_seed(ex.what(), s, i);
    }
  }
  return r;
}

}  // namespace torihedra::testing
