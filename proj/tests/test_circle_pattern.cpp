#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "support.hpp"
#include "torihedra/angle_structure.hpp"
#include "torihedra/catalog.hpp"
#include "torihedra/circle_pattern.hpp"
#include "torihedra/errors.hpp"
#include "torihedra/volume.hpp"

using namespace torihedra;
namespace tt = torihedra::testing;

namespace {

constexpr double kPi = std::numbers::pi;

const char* const kPassing[] = {"square-weave", "triaxial", "3.4.6.4", "3.3.6.6", "3.4.4.6", "Lj:1", "Lj:2"};

// Triangle with A = 0, C = 1, angle alpha at A and gamma at C; B is the
// intersection of the two rays. Returns (B - A) / (C - A).
Complex ratio_oracle(double alpha, double gamma) {
  const Complex u = std::polar(1.0, alpha);
  const Complex w = std::polar(1.0, kPi - gamma);
  Eigen::Matrix2d m;
  m << u.real(), -w.real(), u.imag(), -w.imag();
  const Eigen::Vector2d st = m.colPivHouseholderQr().solve(Eigen::Vector2d(1.0, 0.0));
  return st(0) * u;
}

struct Pipeline {
  TorusDiagram diagram;
  RadiiSolution radii;
  CirclePattern pattern;
  IdealTriangulation stellated;
  ShapeAssignment shapes;
};

Pipeline run(const TorusDiagram& d) {
  RadiiSolution s = solve_radii(d);
  CirclePattern p = layout(d, s.radii);
  IdealTriangulation t = stellate(d);
  ShapeAssignment z = shape_parameters(p, t);
  return {d, std::move(s), std::move(p), std::move(t), std::move(z)};
}

Pipeline run(const char* name) { return run(catalog_link(name)); }

double radius_of_degree(const Pipeline& p, int degree) {
  const auto& faces = p.pattern.graph.faces().faces;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (faces[f].degree() == degree) return p.radii.radii[f];
  ADD_FAILURE() << "no face of degree " << degree;
  return 0;
}

}  // namespace

TEST(EdgeParameter, Examples) {
  EXPECT_NEAR(std::abs(edge_parameter(kPi / 3, kPi / 3, kPi / 3) - std::polar(1.0, kPi / 3)), 0, 1e-15);
  EXPECT_NEAR(std::abs(edge_parameter(kPi / 2, kPi / 4, kPi / 4) - Complex(0, 1)), 0, 1e-15);
}

TEST(EdgeParameter, MatchesSideRatio) {
  std::mt19937_64 rng(tt::seed());
  std::uniform_real_distribution<double> u(0.01, kPi - 0.01);
  int cases = 0;
  while (cases < 1000) {
    const double alpha = u(rng), beta = u(rng);
    const double gamma = kPi - alpha - beta;
    if (gamma < 0.01) continue;
    const Complex oracle = ratio_oracle(alpha, gamma);
    const Complex z = edge_parameter(alpha, beta, gamma);
    ASSERT_NEAR(std::abs(z - oracle) / std::abs(oracle), 0, 1e-10) << alpha << " " << beta << " " << gamma;
    ++cases;
  }
}

TEST(EdgeParameter, TriangleProductProperty) {
  const auto r = tt::triangle_product_property(tt::seed(), 1000, 1e-12);
  EXPECT_TRUE(r.passed()) << r.first_failure << " max error " << r.max_error;
  EXPECT_GE(r.cases, 1000);
}

TEST(BsCondition, CatalogWithoutBigonsPasses) {
  for (const char* name : kPassing) {
    const BsVerdict v = check_bs_condition(catalog_link(name));
    EXPECT_TRUE(v.passed) << name << ": " << v.reason;
    EXPECT_FALSE(v.witness) << name;
  }
}

TEST(BsCondition, BigonsRejected) {
  for (const char* name : {"4.8.8", "6.6.6"}) {
    const BsVerdict v = check_bs_condition(catalog_link(name));
    EXPECT_FALSE(v.passed) << name;
    EXPECT_NE(v.reason.find("bigon"), std::string::npos) << v.reason;
  }
  EXPECT_FALSE(check_bs_condition(tt::twist_chain_diagram(3)).passed);
}

TEST(BsCondition, WheelFailsWithFourCut) {
  const BsVerdict v = check_bs_condition(tt::wheel_diagram());
  EXPECT_FALSE(v.passed);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->cut_size, 4);
  EXPECT_EQ(v.witness->inside.size(), 5u);
  EXPECT_EQ(v.window, 3);
}

TEST(BsCondition, ConnectedSumFails) {
  const TorusDiagram d = tt::connected_sum_diagram();
  EXPECT_FALSE(check_bs_condition(d).passed);
  const CutReport wp = is_weakly_prime(d);
  EXPECT_FALSE(wp.passed);
  EXPECT_EQ(wp.witness.cut_size, 2);
}

TEST(SolveRadii, SquareWeaveEqual) {
  const RadiiSolution s = solve_radii(catalog_link("square-weave"));
  ASSERT_EQ(s.radii.size(), 2u);
  EXPECT_NEAR(s.radii[0], 1, 1e-12);
  EXPECT_NEAR(s.radii[1], 1, 1e-12);
}

TEST(SolveRadii, TriaxialRatio) {
  const Pipeline p = run("triaxial");
  EXPECT_NEAR(radius_of_degree(p, 6) / radius_of_degree(p, 3), std::sqrt(3.0), 1e-12);
}

TEST(SolveRadii, TrihexagonalSquareRatios) {
  // triangle closing 3 * 2 atan(r4 / r3) = 2 pi, hexagon closing 6 * 2 atan(r4 / r6) = 2 pi
  const Pipeline p = run("3.4.6.4");
  const double r3 = radius_of_degree(p, 3), r4 = radius_of_degree(p, 4), r6 = radius_of_degree(p, 6);
  EXPECT_NEAR(r4 / r3, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(r6 / r3, 3.0, 1e-12);
  EXPECT_NEAR(4 * std::atan(r3 / r4) + 4 * std::atan(r6 / r4), 2 * kPi, 1e-12);
}

TEST(SolveRadii, ConvergenceContract) {
  for (const char* name : kPassing) {
    const TorusDiagram d = catalog_link(name);
    const RadiiSolution s = solve_radii(d);
    EXPECT_LT(s.residual, 1e-12) << name;
    EXPECT_TRUE(s.definite) << name;
    for (std::size_t k = 1; k < s.history.size(); ++k) EXPECT_LT(s.history[k], s.history[k - 1]) << name << " step " << k;
    double log_sum = 0;
    for (double r : s.radii) {
      EXPECT_GT(r, 0);
      log_sum += std::log(r);
    }
    EXPECT_NEAR(log_sum, 0, 1e-12) << name;
    double worst = 0;
    for (double x : closing_residuals(collapse_bigons(d), s.radii)) worst = std::max(worst, std::abs(x));
    EXPECT_LT(worst, 1e-12) << name;
  }
}

TEST(SolveRadii, BigonsUnsupported) {
  try {
    solve_radii(catalog_link("4.8.8"));
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
}

TEST(Layout, SquareWeaveLattice) {
  const Pipeline p = run("square-weave");
  EXPECT_NEAR(std::abs(cusp_shape_top(p.pattern) - Complex(0, 1)), 0, 1e-9);
}

TEST(Layout, TriaxialLattice) {
  const Pipeline p = run("triaxial");
  EXPECT_NEAR(std::abs(cusp_shape_top(p.pattern) - std::polar(1.0, kPi / 3)), 0, 1e-9);
}

TEST(Layout, ResidualsAcrossPassingDiagrams) {
  for (const char* name : kPassing) {
    const Pipeline p = run(name);
    EXPECT_LT(p.pattern.layout_residual, 1e-9) << name;
    EXPECT_LT(p.pattern.circle_residual, 1e-9) << name;
    EXPECT_LT(p.pattern.orthogonality_residual, 1e-9) << name;
    EXPECT_LT(p.pattern.closing_residual, 1e-9) << name;
    EXPECT_GT(std::abs(std::imag(std::conj(p.pattern.t1) * p.pattern.t2)), 1e-6) << name;
  }
}

TEST(Layout, CornersLieOnCircles) {
  const Pipeline p = run("3.4.4.6");
  const auto& faces = p.pattern.graph.faces().faces;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int k = 0; k < faces[f].degree(); ++k)
      EXPECT_NEAR(std::abs(p.pattern.corner(static_cast<int>(f), k) - p.pattern.centers[f]), p.radii.radii[f], 1e-9);
}

TEST(Shapes, RegularValues) {
  const Pipeline tri = run("triaxial");
  const auto& faces = tri.stellated.tiling().faces().faces;
  for (int t = 0; t < static_cast<int>(tri.shapes.z.size()); ++t) {
    const int n = faces[tri.stellated.edge_classes()[tri.stellated.class_of(t, 0)].face].degree();
    EXPECT_NEAR(std::abs(tri.shapes.at(t, 0) - std::polar(1.0, 2 * kPi / n)), 0, 1e-12);
    if (n == 6)
      for (const Complex& x : tri.shapes.z[t]) EXPECT_NEAR(std::abs(x - std::polar(1.0, kPi / 3)), 0, 1e-12);
  }
  const Pipeline sq = run("square-weave");
  for (int t = 0; t < static_cast<int>(sq.shapes.z.size()); ++t)
    EXPECT_NEAR(std::abs(sq.shapes.at(t, 0) - Complex(0, 1)), 0, 1e-12);
}

TEST(Shapes, ArgumentsGiveSemiRegularAngles) {
  for (const char* name : {"square-weave", "triaxial"}) {
    const Pipeline p = run(name);
    const AngleStructure a = semiregular_angles(p.stellated);
    for (int t = 0; t < a.size(); ++t)
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::arg(p.shapes.z[t][k]), a.angles[t][k], 1e-12) << name;
  }
}

TEST(Gluing, SquareWeaveAndTriaxial) {
  for (const char* name : {"square-weave", "triaxial"}) {
    const Pipeline p = run(name);
    const GluingReport r = verify_gluing(p.stellated, p.shapes, 1e-10);
    EXPECT_TRUE(r.ok) << name;
    EXPECT_LT(r.max_residual, 1e-10) << name;
    EXPECT_LT(r.tet_residual, 1e-10) << name;
    EXPECT_LT(r.unimodular_residual, 1e-9) << name;
    EXPECT_GT(r.min_imaginary, 0) << name;
    EXPECT_EQ(r.classes.size(), p.stellated.edge_classes().size()) << name;
  }
}

TEST(Gluing, TriangleProductPerTetrahedron) {
  for (const char* name : kPassing) {
    const Pipeline p = run(name);
    for (const auto& z : p.shapes.z) EXPECT_NEAR(std::abs(z[0] * z[1] * z[2] + 1.0), 0, 1e-12) << name;
    const GluingReport r = verify_gluing(p.stellated, p.shapes);
    EXPECT_LT(r.unimodular_residual, 1e-9) << name;
    EXPECT_GT(r.min_imaginary, 0) << name;
  }
}

TEST(Gluing, PerturbedRadiusFlagsUnclosedFaces) {
  for (const char* name : {"square-weave", "triaxial"}) {
    const TorusDiagram d = catalog_link(name);
    std::vector<double> radii = solve_radii(d).radii;
    radii[0] *= 1.05;
    const std::vector<double> closing = closing_residuals(collapse_bigons(d), radii);
    const CirclePattern p = layout(d, radii, 1e3);
    const IdealTriangulation t = stellate(d);
    const GluingReport r = verify_gluing(t, shape_parameters(p, t));
    EXPECT_FALSE(r.ok) << name;
    std::set<int> expected;
    for (std::size_t c = 0; c < t.edge_classes().size(); ++c) {
      const EdgeClass& cls = t.edge_classes()[c];
      if (cls.kind == EdgeKind::Stellating && std::abs(closing[cls.face]) > 1e-9) expected.insert(static_cast<int>(c));
    }
    std::set<int> flagged;
    for (const ClassResidual& v : r.violations) {
      flagged.insert(v.edge_class);
      const int face = t.edge_classes()[v.edge_class].face;
      if (face >= 0) EXPECT_NEAR(v.residual, std::abs(closing[face]), 1e-9);
    }
    EXPECT_EQ(flagged, expected) << name;
    EXPECT_FALSE(expected.empty()) << name;
  }
}

TEST(Similarity, ScalingProperty) {
  const auto r = tt::similarity_property(tt::seed(), 1000, 1e-12);
  EXPECT_TRUE(r.passed()) << r.first_failure << " max error " << r.max_error;
  EXPECT_GE(r.cases, 1000);
}

TEST(VolumeBounds, SquareWeaveEquality) {
  const VolumeBounds b = volume_bounds(catalog_link("square-weave"));
  const double v = 2 * constants().v_oct;
  EXPECT_NEAR(b.vol_perp, v, 1e-8);
  ASSERT_TRUE(b.vol_estimate);
  EXPECT_NEAR(*b.vol_estimate, v, 1e-8);
  EXPECT_NEAR(b.vol_diamond, v, 1e-8);
  EXPECT_TRUE(b.equality_flag);
  EXPECT_TRUE(b.ordered);
}

TEST(VolumeBounds, TriaxialEquality) {
  const VolumeBounds b = volume_bounds(catalog_link("triaxial"));
  const double v = 10 * constants().v_tet;
  EXPECT_NEAR(b.vol_perp, v, 1e-8);
  ASSERT_TRUE(b.vol_estimate);
  EXPECT_NEAR(*b.vol_estimate, v, 1e-8);
  EXPECT_NEAR(b.vol_diamond, v, 1e-8);
  EXPECT_TRUE(b.equality_flag);
}

TEST(VolumeBounds, KitesAgreeWithShapes) {
  for (const char* name : kPassing) {
    const VolumeBounds b = volume_bounds(catalog_link(name));
    EXPECT_NEAR(b.vol_perp, b.vol_perp_kites, 1e-9) << name;
    EXPECT_TRUE(b.ordered) << name;
  }
}

TEST(VolumeBounds, SemiRegularLinksReachUpperBound) {
  // vol_perp stays strictly below; the maximized volume is the exact value,
  // which equals the bipyramid bound for every semi-regular link
  for (const char* name : {"3.4.6.4", "3.3.6.6", "3.4.4.6", "Lj:1"}) {
    const TorusDiagram d = catalog_link(name);
    const VolumeBounds b = volume_bounds(d);
    const TilingGraph tl = collapse_bigons(d);
    ASSERT_TRUE(b.vol_estimate) << name;
    EXPECT_NEAR(*b.vol_estimate, exact_volume(tl.census(), false).value, 1e-8) << name;
    EXPECT_NEAR(*b.vol_estimate, b.vol_diamond, 1e-8) << name;
    EXPECT_GT(*b.vol_estimate - b.vol_perp, 1e-4) << name;
    EXPECT_FALSE(b.equality_flag) << name;
  }
}
