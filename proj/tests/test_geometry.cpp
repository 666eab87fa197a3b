#include <gtest/gtest.h>

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "support.hpp"
#include "torihedra/angle_structure.hpp"
#include "torihedra/arithmetic.hpp"
#include "torihedra/catalog.hpp"
#include "torihedra/errors.hpp"
#include "torihedra/lobachevsky.hpp"
#include "torihedra/triangulation.hpp"
#include "torihedra/volume.hpp"

using namespace torihedra;
namespace tt = torihedra::testing;

namespace {

constexpr double kPi = std::numbers::pi;

IdealTriangulation prime_of(const std::string& name) { return three_two_moves(stellate(catalog_link(name))); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::Io;
}

}  // namespace

TEST(Lobachevsky, SpecialValues) {
  EXPECT_EQ(lobachevsky(0), 0);
  EXPECT_NEAR(lobachevsky(kPi / 2), 0, 1e-15);
  EXPECT_NEAR(lobachevsky(kPi), 0, 1e-15);
  EXPECT_NEAR(lobachevsky(kPi / 3), tt::lobachevsky_oracle(kPi / 3), 1e-12);
  EXPECT_NEAR(lobachevsky(kPi / 4), tt::lobachevsky_oracle(kPi / 4), 1e-12);
  EXPECT_NEAR(lobachevsky(kPi / 3), 1.01494 / 3, 5e-6);
  EXPECT_NEAR(lobachevsky(kPi / 4), 3.66386 / 8, 5e-6);
}

TEST(Lobachevsky, SixthIdentity) {
  EXPECT_NEAR(lobachevsky(kPi / 6), 1.5 * lobachevsky(kPi / 3), 1e-12);
  EXPECT_NEAR(tt::lobachevsky_oracle(kPi / 6), 1.5 * tt::lobachevsky_oracle(kPi / 3), 1e-12);
}

TEST(Lobachevsky, MaximumAtPiOverSix) {
  const double top = lobachevsky(kPi / 6);
  for (int i = 1; i <= 600; ++i) {
    const double theta = kPi * i / 601;
    if (std::abs(theta - kPi / 6) > 1e-9) EXPECT_LT(lobachevsky(theta), top) << theta;
  }
}

TEST(Lobachevsky, OracleProperty) {
  const auto r = tt::lobachevsky_property(tt::seed(), 1000, 1e-12);
  EXPECT_TRUE(r.passed()) << r.first_failure << " max error " << r.max_error;
  EXPECT_GE(r.cases, 1000);
}

TEST(Lobachevsky, ClausenRelation) {
  std::mt19937_64 rng(tt::seed());
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const double theta = u(rng);
    EXPECT_NEAR(lobachevsky(theta), 0.5 * clausen2(2 * theta), 1e-15);
  }
}

TEST(Constants, MatchPrintedDecimals) {
  const GeometryConstants& c = constants();
  // printed decimals are truncations
  auto printed = [](double v, double shown, int places) {
    const double unit = std::pow(10.0, -places);
    return v >= shown - 1e-12 && v < shown + unit;
  };
  EXPECT_TRUE(printed(c.v_tet, 1.01494, 5)) << c.v_tet;
  EXPECT_TRUE(printed(c.v_oct, 3.66386, 5)) << c.v_oct;
  EXPECT_TRUE(printed(c.v16, 7.8549, 4)) << c.v16;
  EXPECT_TRUE(printed(c.v24, 10.3725, 4)) << c.v24;
  EXPECT_NEAR(c.v_tet, 3 * tt::lobachevsky_oracle(kPi / 3), 1e-12);
  EXPECT_NEAR(c.v_oct, 8 * tt::lobachevsky_oracle(kPi / 4), 1e-12);
  EXPECT_DOUBLE_EQ(c.v16, bipyramid_volume(8));
  EXPECT_DOUBLE_EQ(c.v24, bipyramid_volume(12));
}

TEST(TetVolume, Examples) {
  EXPECT_NEAR(tet_volume(kPi / 3, kPi / 3, kPi / 3), 1.01494, 5e-6);
  const double quarter_oct = 2 * tt::lobachevsky_oracle(kPi / 4) + tt::lobachevsky_oracle(kPi / 2);
  EXPECT_NEAR(tet_volume(kPi / 2, kPi / 4, kPi / 4), quarter_oct, 1e-12);
  EXPECT_NEAR(4 * tet_volume(kPi / 2, kPi / 4, kPi / 4), 3.66386, 5e-5);
  double previous = tet_volume(kPi / 3, kPi / 3, kPi / 3);
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
    const double v = tet_volume(kPi - 2 * eps, eps, eps);
    EXPECT_LT(v, previous);
    previous = v;
  }
  EXPECT_LT(previous, 1e-4);
}

TEST(TetVolume, AngleSumViolation) {
  EXPECT_EQ(kind_of([] { tet_volume(1, 1, 1); }), ErrorKind::AngleSum);
  EXPECT_EQ(kind_of([] { tet_volume(kPi + 0.1, -0.05, -0.05); }), ErrorKind::AngleSum);
}

TEST(Bipyramid, PrintedValues) {
  const GeometryConstants& c = constants();
  EXPECT_NEAR(bipyramid_volume(3), 2 * c.v_tet, 1e-12);
  EXPECT_NEAR(bipyramid_volume(4), 3.66386, 5e-5);
  EXPECT_NEAR(bipyramid_volume(6), 6 * c.v_tet, 1e-12);
  EXPECT_NEAR(bipyramid_volume(6), 6.08965, 5e-5);
  EXPECT_NEAR(bipyramid_volume(8), 7.8549, 5e-4);
  EXPECT_NEAR(bipyramid_volume(12), 10.3725, 5e-4);
  EXPECT_EQ(kind_of([] { bipyramid_volume(2); }), ErrorKind::Unsupported);
}

TEST(Bipyramid, MonotoneInN) {
  for (int n = 3; n < 100; ++n) EXPECT_LT(bipyramid_volume(n), bipyramid_volume(n + 1)) << n;
  // per-tetrahedron share peaks at the regular tetrahedron (n = 6) and then decays
  for (int n = 3; n < 6; ++n) EXPECT_LT(bipyramid_volume(n) / n, bipyramid_volume(n + 1) / (n + 1)) << n;
  for (int n = 6; n < 100; ++n) EXPECT_GT(bipyramid_volume(n) / n, bipyramid_volume(n + 1) / (n + 1)) << n;
  EXPECT_NEAR(bipyramid_volume(6) / 6, constants().v_tet, 1e-12);
}

TEST(SemiRegularAngles, SquareWeave) {
  const IdealTriangulation t = prime_of("square-weave");
  const AngleStructure a = semiregular_angles(t);
  for (const auto& triple : a.angles) {
    EXPECT_NEAR(triple[0], kPi / 2, 1e-15);
    EXPECT_NEAR(triple[1], kPi / 4, 1e-15);
    EXPECT_NEAR(triple[2], kPi / 4, 1e-15);
  }
  EXPECT_TRUE(verify_angles(t, a).ok);
}

TEST(SemiRegularAngles, TriaxialIsRegular) {
  const IdealTriangulation t = prime_of("triaxial");
  const AngleStructure a = semiregular_angles(t);
  for (const auto& triple : a.angles)
    for (double x : triple) EXPECT_NEAR(x, kPi / 3, 1e-15);
  EXPECT_TRUE(verify_angles(t, a).ok);
}

TEST(SemiRegularAngles, WholeCatalogVerifies) {
  for (const CatalogEntry& e : catalog_entries()) {
    const IdealTriangulation t = prime_of(e.name);
    const AngleReport r = verify_angles(t, semiregular_angles(t));
    EXPECT_TRUE(r.ok) << e.name;
  }
}

TEST(SemiRegularAngles, BigonClassSumsToTwoPi) {
  const IdealTriangulation t = prime_of("4.8.8");
  const AngleStructure a = semiregular_angles(t);
  bool saw_six = false;
  for (std::size_t c = 0; c < t.edge_classes().size(); ++c) {
    const EdgeClass& cls = t.edge_classes()[c];
    if (cls.kind != EdgeKind::Horizontal || cls.degree() != 6) continue;
    saw_six = true;
    double sum = 0;
    for (const EdgeMember& m : cls.members) sum += a.at(m.tet, m.edge);
    EXPECT_NEAR(sum, 2 * kPi, 1e-12);
  }
  EXPECT_TRUE(saw_six);
}

TEST(SemiRegularAngles, RejectsNonSemiRegular) {
  const IdealTriangulation t = three_two_moves(stellate(tt::wheel_diagram()));
  EXPECT_EQ(kind_of([&] { semiregular_angles(t); }), ErrorKind::NotSemiRegular);
}

TEST(VerifyAngles, PerturbationFlagsExactlyTheAffectedSums) {
  const IdealTriangulation t = prime_of("triaxial");
  AngleStructure a = semiregular_angles(t);
  const int tet = 4;
  const int pair = 1;
  a.angles[tet][pair] += 0.01;
  const AngleReport r = verify_angles(t, a);
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.tetrahedra.size(), 1u);
  EXPECT_EQ(r.tetrahedra[0].tet, tet);
  EXPECT_NEAR(r.tetrahedra[0].sum, kPi + 0.01, 1e-12);
  std::set<int> expected;
  for (int e = 0; e < 6; ++e)
    if (angle_pair(e) == pair) expected.insert(t.class_of(tet, e));
  std::set<int> flagged;
  for (const ClassViolation& v : r.classes) flagged.insert(v.edge_class);
  EXPECT_EQ(flagged, expected);
}

TEST(VerifyAngles, AllThirdsFailOnSquareWeave) {
  const IdealTriangulation t = prime_of("square-weave");
  AngleStructure a;
  a.angles.assign(t.size(), {kPi / 3, kPi / 3, kPi / 3});
  const AngleReport r = verify_angles(t, a);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.tetrahedra.empty());
  int stellating = 0;
  for (const ClassViolation& v : r.classes) {
    if (t.edge_classes()[v.edge_class].kind != EdgeKind::Stellating) continue;
    ++stellating;
    EXPECT_NEAR(v.sum, 4 * kPi / 3, 1e-12);
  }
  EXPECT_EQ(stellating, 2);
}

TEST(MaximizeVolume, SingleFreeTetrahedron) {
  AngleProblem p;
  p.tets = 1;
  p.add_row({{0, 1.0}, {1, 1.0}, {2, 1.0}}, kPi, "tet 0");
  const VolumeMaximum m = maximize_volume(p);
  for (double x : m.angles.angles[0]) EXPECT_NEAR(x, kPi / 3, 1e-9);
  EXPECT_NEAR(m.volume, constants().v_tet, 1e-12);
  EXPECT_FALSE(m.boundary_flag);
  EXPECT_LT(m.kkt_residual, 1e-10);
}

TEST(MaximizeVolume, CoupledPairAgainstLineSearch) {
  // x0 + 2 y0 = 2 couples the first angles of two tetrahedra; for fixed first
  // angles the optimum splits the rest evenly, leaving a 1-d problem.
  AngleProblem p;
  p.tets = 2;
  p.add_row({{0, 1.0}, {1, 1.0}, {2, 1.0}}, kPi, "tet 0");
  p.add_row({{3, 1.0}, {4, 1.0}, {5, 1.0}}, kPi, "tet 1");
  p.add_row({{0, 1.0}, {3, 2.0}}, 2.0, "coupling");
  const VolumeMaximum m = maximize_volume(p);

  auto negative = [](double a) {
    const double b = (2.0 - a) / 2;
    return -(lobachevsky(a) + 2 * lobachevsky((kPi - a) / 2) + lobachevsky(b) + 2 * lobachevsky((kPi - b) / 2));
  };
  const auto [a_star, f_star] = boost::math::tools::brent_find_minima(negative, 1e-9, 2.0 - 1e-9, 52);
  EXPECT_NEAR(m.volume, -f_star, 1e-12);
  EXPECT_NEAR(m.angles.angles[0][0], a_star, 1e-6);
  EXPECT_NEAR(m.angles.angles[1][0], (2.0 - a_star) / 2, 1e-6);
  EXPECT_LT(m.kkt_residual, 1e-10);
}

TEST(MaximizeVolume, InfeasibleSystem) {
  AngleProblem p;
  p.tets = 1;
  p.add_row({{0, 1.0}, {1, 1.0}, {2, 1.0}}, kPi, "tet 0");
  p.add_row({{0, 1.0}, {1, 1.0}}, kPi, "no room");
  EXPECT_EQ(kind_of([&] { maximize_volume(p); }), ErrorKind::Infeasible);
  AngleProblem q;
  q.tets = 1;
  q.add_row({{0, 1.0}, {1, 1.0}, {2, 1.0}}, kPi, "tet 0");
  q.add_row({{0, 1.0}}, 4.0, "too wide");
  EXPECT_EQ(kind_of([&] { maximize_volume(q); }), ErrorKind::Infeasible);
}

TEST(MaximizeVolume, TriaxialMatchesExact) {
  const IdealTriangulation t = prime_of("triaxial");
  const VolumeMaximum m = maximize_volume(t);
  EXPECT_NEAR(m.volume, 10 * constants().v_tet, 1e-8);
  EXPECT_NEAR(m.volume, 10.14942, 5e-6);
  EXPECT_FALSE(m.boundary_flag);
  EXPECT_LT(m.kkt_residual, 1e-10);
}

TEST(MaximizeVolume, SquareWeaveMatchesExact) {
  const VolumeMaximum m = maximize_volume(prime_of("square-weave"));
  EXPECT_NEAR(m.volume, 2 * constants().v_oct, 1e-8);
}

TEST(MaximizeVolume, MaximizerIsSemiRegularAcrossCatalog) {
  for (const CatalogEntry& e : catalog_entries()) {
    const IdealTriangulation t = prime_of(e.name);
    const VolumeMaximum m = maximize_volume(t);
    const AngleStructure s = semiregular_angles(t);
    const TilingGraph& tl = t.tiling();
    const VolumeReport exact = exact_volume(tl.census(), tl.has_bigons());
    EXPECT_NEAR(m.volume, exact.value, 1e-8) << e.name;
    EXPECT_NEAR(volume_of(s), exact.value, 1e-10) << e.name;
    double worst = 0;
    for (int i = 0; i < s.size(); ++i)
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(m.angles.angles[i][k] - s.angles[i][k]));
    EXPECT_LT(worst, 1e-6) << e.name;
    EXPECT_TRUE(verify_angles(t, m.angles).ok) << e.name;
  }
}

TEST(ExactVolume, Examples) {
  const GeometryConstants& c = constants();
  const VolumeReport tri = exact_volume(Census{2, 0, 1, 0, 0, 0}, false, 3);
  EXPECT_NEAR(tri.value, 10 * c.v_tet, 1e-12);
  EXPECT_NEAR(tri.density, 10 * c.v_tet / 3, 1e-12);
  EXPECT_EQ(tri.formula(), "10*v_tet");
  for (int j = 1; j <= 3; ++j) {
    const VolumeReport r = exact_volume(Census{2, 4 * j, 1, 0, 0, 0}, false);
    EXPECT_NEAR(r.value, 10 * c.v_tet + 4 * j * c.v_oct, 1e-12);
  }
  const VolumeReport hex = exact_volume(Census{0, 0, 2, 0, 0, 0}, true);
  EXPECT_NEAR(hex.value, 12 * c.v_tet, 1e-12);
  const VolumeReport mixed = exact_volume(Census{4, 3, 1, 2, 1, 0}, true);
  EXPECT_NEAR(mixed.value, 14 * c.v_tet + 3 * c.v_oct + 2 * c.v16 + c.v24, 1e-12);
}

TEST(ExactVolume, TermsSumToValue) {
  for (const CatalogEntry& e : catalog_entries()) {
    const TilingGraph t = collapse_bigons(catalog_link(e.name));
    const VolumeReport r = exact_volume(t.census(), t.has_bigons(), catalog_link(e.name).crossing_count());
    double sum = 0;
    for (const VolumeTerm& term : r.terms) sum += static_cast<double>(term.coeff) * constant_value(term.constant);
    EXPECT_NEAR(r.value, sum, 1e-12) << e.name;
    EXPECT_NEAR(r.density, r.value / r.crossings, 1e-12) << e.name;
  }
}

TEST(ExactVolume, UnsupportedCensus) {
  EXPECT_EQ(kind_of([] { exact_volume(Census{0, 0, 0, 0, 0, 1}, false); }), ErrorKind::Unsupported);
  EXPECT_EQ(kind_of([] { exact_volume(Census{0, 1, 0, 2, 0, 0}, false); }), ErrorKind::Unsupported);
}

TEST(ExactVolume, TriaxialDensity) {
  const TorusDiagram d = catalog_link("triaxial");
  const VolumeReport r = exact_volume(collapse_bigons(d).census(), false, d.crossing_count());
  EXPECT_NEAR(r.density, 10 * constants().v_tet / 3, 1e-12);
  EXPECT_NEAR(density(r.value, 3), r.density, 1e-15);
}

TEST(BipyramidBound, Examples) {
  EXPECT_NEAR(vol_bipyramid_bound(catalog_tiling("square-weave")), 2 * constants().v_oct, 1e-12);
  EXPECT_NEAR(vol_bipyramid_bound(catalog_tiling("triaxial")), 10 * constants().v_tet, 1e-12);
  const double bound = vol_bipyramid_bound(collapse_bigons(catalog_link("3.4.6.4")));
  EXPECT_GE(bound + 1e-12, maximize_volume(prime_of("3.4.6.4")).volume);
}

TEST(TraceField, Classes) {
  const TraceFieldClass sq = classify_field(Census{0, 2, 0, 0, 0, 0});
  EXPECT_EQ(sq.label, "Q(i)");
  EXPECT_TRUE(sq.arithmetic);
  EXPECT_NE(sq.note.find("Whitehead"), std::string::npos);
  for (const char* name : {"triaxial", "3.3.6.6"}) {
    const TraceFieldClass f = classify_field(catalog_tiling(name).census());
    EXPECT_EQ(f.label, "Q(i√3)") << name;
    EXPECT_TRUE(f.arithmetic);
    EXPECT_NE(f.note.find("figure-8"), std::string::npos);
  }
  const TraceFieldClass mixed = classify_field(catalog_tiling("Lj:2").census());
  EXPECT_EQ(mixed.label, "Q(i,√3)");
  EXPECT_FALSE(mixed.arithmetic);
  EXPECT_EQ(kind_of([] { classify_field(Census{0, 0, 2, 0, 0, 0}, true); }), ErrorKind::Unsupported);
}

TEST(Commensurability, FamilyDeterminant) {
  const CommensurabilityVerdict v = incommensurable(catalog_tiling("Lj:1").census(), catalog_tiling("Lj:2").census());
  EXPECT_EQ(v.p1, 10);
  EXPECT_EQ(v.q1, 4);
  EXPECT_EQ(v.p2, 10);
  EXPECT_EQ(v.q2, 8);
  EXPECT_EQ(v.determinant, 40);
  EXPECT_TRUE(v.incommensurable);
  EXPECT_EQ(v.verdict, "incommensurable (conditional on v_tet, v_oct rational independence)");
  const auto same = incommensurable(Census{0, 2, 0, 0, 0, 0}, Census{0, 2, 0, 0, 0, 0});
  EXPECT_EQ(same.determinant, 0);
  EXPECT_EQ(same.verdict, "volume-compatible");
}

TEST(Commensurability, CoverScalingProperty) {
  std::mt19937_64 rng(tt::seed());
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_int_distribution<int> factor(1, 6);
  int cases = 0;
  while (cases < 1000) {
    const int h1 = count(rng), s1 = count(rng), h2 = count(rng), s2 = count(rng);
    if (h1 + s1 == 0 || h2 + s2 == 0) continue;
    const Census a{2 * h1, s1, h1, 0, 0, 0};
    const Census b{2 * h2, s2, h2, 0, 0, 0};
    const int k = factor(rng);
    const Census ak{2 * h1 * k, s1 * k, h1 * k, 0, 0, 0};
    const auto base = incommensurable(a, b);
    const auto scaled = incommensurable(ak, b);
    const auto both = incommensurable(ak, Census{2 * h2 * k, s2 * k, h2 * k, 0, 0, 0});
    ASSERT_EQ(both.determinant, static_cast<long long>(k) * k * base.determinant) << cases;
    ASSERT_EQ(scaled.incommensurable, base.incommensurable) << cases;
    ASSERT_EQ(both.verdict, base.verdict) << cases;
    ASSERT_EQ(classify_field(ak).label, classify_field(a).label) << cases;
    ++cases;
  }
}

TEST(CuspModulus, Lattices) {
  const auto sq = cusp_modulus({1, 0}, {0, 1});
  EXPECT_NEAR(std::abs(sq - std::complex<double>(0, 1)), 0, 1e-15);
  const auto hex = cusp_modulus({2, 0}, {1, std::sqrt(3.0)});
  EXPECT_NEAR(std::abs(hex - std::polar(1.0, kPi / 3)), 0, 1e-15);
  EXPECT_EQ(kind_of([] { cusp_modulus({1, 1}, {2, 2}); }), ErrorKind::Degenerate);
}

TEST(CuspModulus, FamilyDomains) {
  for (int j = 1; j <= 3; ++j) {
    const TilingGraph t = catalog_tiling("Lj:" + std::to_string(j));
    ASSERT_TRUE(t.embedding());
    const auto tau = cusp_modulus(t.embedding()->t1, t.embedding()->t2);
    // one hexagon-triangle strip of height sqrt 3 over 2j square rows, width 2
    const std::complex<double> expected(0.5, (std::sqrt(3.0) + 2 * j) / 2);
    EXPECT_NEAR(std::abs(tau - expected), 0, 1e-12) << j;
  }
}

TEST(CuspModulus, InvariantUnderBasisChange) {
  std::mt19937_64 rng(tt::seed());
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_real_distribution<double> coord(-2, 2);
  int cases = 0;
  while (cases < 1000) {
    const std::complex<double> t1(coord(rng), coord(rng)), t2(coord(rng), coord(rng));
    if (std::abs(std::imag(std::conj(t1) * t2)) < 0.2) continue;
    const int a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (std::abs(a * d - b * c) != 1) continue;
    const auto tau = cusp_modulus(t1, t2);
    const auto tau2 = cusp_modulus(double(a) * t1 + double(b) * t2, double(c) * t1 + double(d) * t2);
    EXPECT_GT(tau.imag(), 0);
    EXPECT_LE(std::abs(tau.real()), 0.5 + 1e-12);
    EXPECT_GE(std::abs(tau), 1 - 1e-12);
    EXPECT_NEAR(std::abs(tau - tau2), 0, 1e-9) << cases;
    ++cases;
  }
}
