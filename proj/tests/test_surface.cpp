#include <gtest/gtest.h>

#include "surfrev/catalog.hpp"
#include "surfrev/fd_geometry.hpp"

using namespace surfrev;

namespace {

using V = LVec3<Scalar>;
const Scalar I{0, 1};

SurfacePatch flat() {
  return make_patch("flat", {}, Rect{-1, 1, -1, 1}, NormMode::Absolute, [](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(s)>;
    return LVec3<S>{s, t, S(lit(s, 0.0))};
  });
}

void expect_vec(const V& got, const V& want, double tol, const char* what) {
  for (int c = 0; c < 3; ++c) EXPECT_NEAR(std::abs(got[c] - want[c]), 0.0, tol) << what << " component " << c + 1;
}

void expect_scalar(const Scalar& got, const Scalar& want, double tol, const char* what) {
  EXPECT_LE(std::abs(got - want), tol * std::max(1.0, std::abs(want))) << what << " got " << got << " want " << want;
}

// Values from an independent 40-digit evaluation (numerical differentiation of
// the charts), printed to 12 significant digits.
struct Fixture {
  std::string id;
  Params params;
  double s, t;
  Scalar E, F, G;
  V N;
  Scalar e, f, g, H, K;
  V dN;
  Scalar k;
  bool one_type;
  std::optional<double> K_II;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f = {
      {"rev1", {{"a", 3}, {"b", 1}}, 0.3, 0.5, 11.25, 0, 1,
       {-0.284826310809, -0.0881071027759, -1.0434983895}, 1.0, 0, -0.0888888888889, 0,
       -0.0079012345679, {0.00450095898563, 0.00139230977226, 0.0164898510933}, -0.0158024691358, true, 0.0},
      {"rev1", {{"a", 3}, {"b", 1}}, 0, 0, 8, 0, 1, {-0.353553390593, 0, -1.06066017178}, 1.0, 0, -0.125, 0,
       -0.015625, {0.011048543456, 0, 0.0331456303681}, -0.03125, true, std::nullopt},
      {"hel1", {{"a", 3}, {"b", 1}}, 0.3, 0.5, 11.25, 0, 1, {0.0881071027759, -0.284826310809, 1.0434983895},
       0, -0.298142397, 0, 0, -0.0079012345679, {-0.00139230977226, 0.00450095898563, -0.0164898510933},
       -0.0158024691358, true, 0.0},
      {"rev2s", {{"a", 0}, {"b", 2}}, 0, 1, 3, 0, 1, {0, 0.57735026919, 1.15470053838}, -2, 0, 0.666666666667,
       0, -0.444444444444, {0, -0.51320023928, -1.02640047856}, -0.888888888889, true, std::nullopt},
      {"hel2s", {{"a", 0}, {"b", 2}}, 0, 1, 3, 0, 1, {0, 0.57735026919, -1.15470053838}, 0, 1.15470053838, 0,
       0, -0.444444444444, {0, -0.51320023928, 1.02640047856}, -0.888888888889, true, std::nullopt},
      {"rev2t", {{"a", 3}, {"b", -1}}, 0.2, 0.5, -11.25, 0, 1.19512195122,
       {-0.30412514762, 0.954521404218, -0.0600267984}, -1, 0, -0.106233062331, 0, -0.0079012345679,
       {-0.00480592825869, 0.0150837950296, -0.000948571629037}, 0.0158024691358, true, 0.0},
      {"hel2t", {{"a", 3}, {"b", -1}}, 0.2, 0.5, -11.25, 0, 1, {0.0600267984, 1.0434983895, 0.30412514762}, 0,
       -0.298142397, 0, 0, 0.0079012345679, {-0.000948571629037, -0.0164898510933, -0.00480592825869},
       -0.0158024691358, true, 0.0},
      {"rev3", {{"a", 0}, {"b", 1}}, 0, 1, 2, 0, -1, {-0.707106781187, 0, -0.707106781187 * I}, I, 0, 0.5 * I, 0,
       0.25, {0.353553390593, 0, 0.353553390593 * I}, -0.5, true, std::nullopt},
      {"rev3", {{"a", 0}, {"b", 1}}, 0.2, 0.5, 1.25, 0, -1, {-0.4472135955, -0.1800803952 * I, -0.912375442861 * I},
       I, 0, 0.8 * I, 0, 0.64, {0.57243340224, 0.230502905856 * I, 1.16784056686 * I}, -1.28, true, std::nullopt},
      {"rev3", {{"a", 0}, {"b", 1}, {"real_variant", 1}}, 0.2, 0.5, 1.25, 0, 0.6,
       {0.57735026919, 0.232482790529, 1.1778716319}, -1.29099444874, 0, -1.03279555899, -1.37706074532,
       1.77777777778, {-8.89547081418, -1.59810392305, -8.0967768474}, -4.02962962963, false, std::nullopt},
      {"hel3", {{"a", 0}, {"b", 1}}, 0.2, 0.5, 1.25, 0, -1, {0.4472135955, -0.912375442861, -0.1800803952}, 0,
       -0.894427191, 0, 0, 0.64, {-0.57243340224, 1.16784056686, 0.230502905856}, -1.28, true, std::nullopt},
      {"enneper_rev2", {{"a", 1}, {"b", 0}}, 0.2, 0.5, 1, 0, 3, {0.12124355653, -0.230940107676, -1.03345698185},
       -1.15470053838, 0, 3.46410161514, 0, -1.33333333333, {-0.323316150746, 0.615840287136, 2.75588528493},
       -2.66666666667, true, std::nullopt},
      {"enneper_rev3", {{"a", 1}, {"b", 0}}, 0.2, 0.5, 1, 0, -3, {0.987268960314, -0.230940107676, -0.167431578065},
       -1.15470053838, 0, -3.46410161514, 0, -1.33333333333, {2.6327172275, -0.615840287136, -0.446484208173},
       2.66666666667, true, 0.0},
      {"enneper_conj2", {{"h", 1}}, 0.2, -0.5, 2, 0, 1, {-0.282842712475, 0.325269119346, -1.08894444303}, 0,
       1.41421356237, 0, 0, -1, {0.565685424949, -0.650538238692, 2.17788888605}, -2, true, std::nullopt},
      {"enneper_conj2", {{"h", 1}}, 0.2, 0.5, -2, 0, 1, {-0.282842712475, 1.03237590053, -0.381837661841}, 0,
       1.41421356237, 0, 0, 1, {0.565685424949, -2.06475180106, 0.763675323681}, -2, true, std::nullopt},
      {"torus_control", {{"R", 2}, {"r", 0.5}}, 0.5, 0.5, 5.94770291201, 0, -0.135075576467,
       {1.04774973438, 0.572388288623, -0.652232978958}, -2.91168378655, 0, -0.680223440805, -2.27316266311,
       -2.46529959826, {62.6200323997, 34.209479614, -91.3654423475}, 25.5996731683, false, 3.72584280436705},
      {"torus_control", {{"R", 2}, {"r", 0.5}}, 0, 0, 6.25, 0, -0.25, {1, 0, 0}, -2.5, 0, -0.5, -0.8, -0.8,
       {4.16, 0, 0}, 4.16, true, std::nullopt},
  };
  return f;
}

}  // namespace

class Fixtures : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Fixtures, MatchIndependentEvaluation) {
  const Fixture& fx = fixtures()[GetParam()];
  SCOPED_TRACE(fx.id + " at (" + std::to_string(fx.s) + ", " + std::to_string(fx.t) + ")");
  const SurfacePatch p = build(fx.id, fx.params, find_entry(fx.id).default_domain(resolve_params(find_entry(fx.id), fx.params)));
  const auto g = evaluate(p, fx.s, fx.t);
  // Orientation is a catalog convention; compare modulo one overall sign.
  Scalar sigma = 1;
  if (std::abs(g.gauss.N[0] + fx.N[0]) + std::abs(g.gauss.N[1] + fx.N[1]) + std::abs(g.gauss.N[2] + fx.N[2]) <
      std::abs(g.gauss.N[0] - fx.N[0]) + std::abs(g.gauss.N[1] - fx.N[1]) + std::abs(g.gauss.N[2] - fx.N[2]))
    sigma = -1;
  const double tol = 2e-10;
  expect_scalar(g.ff.E, fx.E, tol, "E");
  expect_scalar(g.ff.F, fx.F, tol, "F");
  expect_scalar(g.ff.G, fx.G, tol, "G");
  expect_vec(g.gauss.N, sigma * fx.N, tol, "N");
  expect_scalar(g.ff.e, sigma * fx.e, tol, "e");
  expect_scalar(g.ff.f, sigma * fx.f, tol, "f");
  expect_scalar(g.ff.g, sigma * fx.g, tol, "g");
  expect_scalar(g.H, sigma * fx.H, tol, "H");
  expect_scalar(g.K_ext, fx.K, tol, "K");
  expect_vec(g.dN, sigma * fx.dN, 1e-9, "dN");
  expect_scalar(g.k, fx.k, 1e-9, "k");
  if (fx.one_type)
    EXPECT_LE(g.residual, 1e-10);
  else
    EXPECT_GT(g.residual, 0.01);
  if (fx.K_II) {
    ASSERT_TRUE(g.K_II.has_value());
    expect_scalar(*g.K_II, sigma * *fx.K_II, 1e-9, "K_II");
  }
  // Printed-sign entries must come out with the declared orientation.
  if (fx.id == "rev1" || fx.id == "rev3") {
    EXPECT_EQ(sigma, Scalar(1));
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, Fixtures, ::testing::Range<std::size_t>(0, 17));

TEST(FundamentalForms, DocumentedValues) {
  const auto a = fundamental_forms(build("rev1", {{"a", 3}, {"b", 1}}), 0, 0);
  expect_scalar(a.E, 8, 1e-12, "E");
  expect_scalar(a.F, 0, 1e-12, "F");
  expect_scalar(a.G, 1, 1e-12, "G");
  const auto b = fundamental_forms(build("rev2s", {{"a", 0}, {"b", 2}}), 0, 1);
  expect_scalar(b.E, 3, 1e-12, "E");
  expect_scalar(b.G, 1, 1e-12, "G");
  const auto c = fundamental_forms(build("rev3", {{"a", 0}, {"b", 1}}), 0, 1);
  expect_scalar(c.E, 2, 1e-12, "E");
  expect_scalar(c.G, -1, 1e-12, "G");
  for (int i = 0; i < 2; ++i) {
    expect_scalar(a.ginv[i][0] * a.E + a.ginv[i][1] * a.F, i == 0 ? 1.0 : 0.0, 1e-12, "ginv");
    expect_scalar(a.ginv[i][0] * a.F + a.ginv[i][1] * a.G, i == 1 ? 1.0 : 0.0, 1e-12, "ginv");
  }
}

TEST(GaussMap, DocumentedNormals) {
  const auto a = gauss_map(build("rev1", {{"a", 3}, {"b", 1}}), 0, 0);
  expect_vec(a.N, V{1, 0, 3} * (-1 / std::sqrt(8.0)), 1e-12, "rev1 N");
  EXPECT_EQ(a.epsilon, -1);
  EXPECT_EQ(a.target, SpaceForm::Hyperbolic);
  const auto c = gauss_map(build("rev3", {{"a", 0}, {"b", 1}}), 0, 1);
  expect_vec(c.N, V{1, 0, I} * (-1 / std::sqrt(2.0)), 1e-12, "rev3 N");
  EXPECT_EQ(c.epsilon, 1);
  // The printed rev2s normal (1/√3)(0, 1, -2) is not normal to this chart at
  // t = 1; the computed one is ±(1/√3)(0, 1, 2).
  const auto b = gauss_map(build("rev2s", {{"a", 0}, {"b", 2}}), 0, 1);
  EXPECT_NEAR(std::abs(std::abs(b.N.x2) - 1 / std::sqrt(3.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(b.N.x3 - 2.0 * b.N.x2), 0.0, 1e-12);
}

TEST(GaussMap, UnitAndOrthogonalOnCatalog) {
  for (const auto& e : list_entries()) {
    const SurfacePatch p = build(e.id);
    for (const auto& [s, t] : seeded_points(p, 30, 9)) {
      const auto g = gauss_map(p, s, t);
      const auto x = p.jets(s, t);
      const V xs = x.map([](const Jet4& c) { return c(1, 0); });
      const V xt = x.map([](const Jet4& c) { return c(0, 1); });
      EXPECT_NEAR(std::abs(lorentz_dot(g.N, g.N) - double(g.epsilon)), 0.0, 1e-10) << e.id;
      EXPECT_LE(std::abs(lorentz_dot(g.N, xs)), 1e-10 * std::sqrt(1 + euclid_norm2(xs))) << e.id;
      EXPECT_LE(std::abs(lorentz_dot(g.N, xt)), 1e-10 * std::sqrt(1 + euclid_norm2(xt))) << e.id;
    }
  }
}

TEST(LaplaceBeltrami, FlatPatch) {
  const SurfacePatch p = flat();
  auto sq = [](const Jet4& s, const Jet4&) { return s * s; };
  auto sum = [](const Jet4& s, const Jet4& t) { return s * s + t * t; };
  auto c = [](const Jet4&, const Jet4&) { return Jet4(Scalar(3)); };
  EXPECT_EQ(laplace_beltrami(p, sq, 0.2, 0.1), Scalar(-2));
  EXPECT_EQ(laplace_beltrami(p, sum, 0.2, 0.1), Scalar(-4));
  EXPECT_EQ(laplace_beltrami(p, c, 0.2, 0.1), Scalar(0));
}

TEST(LaplaceBeltrami, GaussMapComponent) {
  const SurfacePatch p = build("rev1", {{"a", 3}, {"b", 1}});
  const V dN = delta_gauss_map(p, 0, 0);
  const double want = 2 * std::pow(8.0, -2.5);
  expect_vec(dN, V{want, 0, 3 * want}, 1e-12, "dN");
  EXPECT_NEAR(dN.x1.real(), 0.0110485, 1e-7);
}

TEST(PointwiseK, DocumentedValues) {
  const auto a = pointwise_k(build("rev1", {{"a", 3}, {"b", 1}}), 0, 0);
  expect_scalar(a.k, -1.0 / 32, 1e-12, "k");
  EXPECT_LE(a.residual, 1e-10);
  const auto b = pointwise_k(build("rev3", {{"a", 0}, {"b", 1}}), 0, 1);
  expect_scalar(b.k, -0.5, 1e-12, "k");
  EXPECT_LE(b.residual, 1e-10);
  const auto c = pointwise_k(build("torus_control"), 0.5, 0.5);
  EXPECT_GT(c.residual, 0.01);
}

TEST(Curvature, FormulasOnSyntheticForms) {
  FundamentalForms ff;
  ff.E = ff.G = ff.e = ff.g = 1;
  ff.F = ff.f = 0;
  ff.detg = 1;
  EXPECT_EQ(mean_curvature(ff), Scalar(1));
  EXPECT_EQ(gaussian_curvature_ext(ff), Scalar(1));
  ff.E = ff.G = 0;
  ff.detg = 0;
  EXPECT_THROW(mean_curvature(ff), DegenerateMetric);
}

TEST(Curvature, PlaneIsFlat) {
  const auto g = evaluate(flat(), 0.3, -0.2);
  EXPECT_EQ(g.H, Scalar(0));
  EXPECT_EQ(g.K_ext, Scalar(0));
  EXPECT_EQ(g.K_int, Scalar(0));
  EXPECT_FALSE(g.K_II.has_value());
  EXPECT_THROW(second_gaussian_curvature(flat(), 0.3, -0.2), DegenerateSecondForm);
}

TEST(Curvature, ExtrinsicOnFirstKindAtBase) {
  const auto g = evaluate(build("rev1", {{"a", 3}, {"b", 1}}), 0, 0);
  expect_scalar(g.K_ext, -1.0 / 64, 1e-12, "K");
  expect_scalar(g.K_int, -1.0 / 64, 1e-9, "K_int");
}

TEST(Curvature, IntrinsicMatchesExtrinsicOnSpaceLikeCharts) {
  for (const char* id : {"rev1", "hel1", "rev2s", "hel2s", "enneper_rev2"}) {
    const SurfacePatch p = build(id);
    for (const auto& [s, t] : seeded_points(p, 20, 3)) {
      const auto g = evaluate(p, s, t);
      EXPECT_LE(agreement(g.K_int, g.K_ext), 1e-6) << id;
    }
  }
}

TEST(Curvature, SecondGaussianConstantForms) {
  // Constant e, f, g leave a zero row in both determinants.
  const Jet2<Scalar, 2> e(Scalar(2)), f(Scalar(0.5)), g(Scalar(-1));
  EXPECT_EQ(detail::brioschi_difference(e, f, g), Scalar(0));
  // A cylinder has eg - f² = 0, so K_II is undefined there.
  const SurfacePatch p = make_patch("cyl", {}, Rect{-1, 1, -1, 1}, NormMode::Absolute,
                                    [](const auto& s, const auto& t) {
                                      using S = std::remove_cvref_t<decltype(s)>;
                                      return LVec3<S>{cos(s), sin(s), t};
                                    });
  EXPECT_FALSE(evaluate(p, 0.1, 0.2).K_II.has_value());
}

TEST(Curvature, ConventionFlagChangesOnlyTheDeterminant) {
  const SurfacePatch p = build("torus_control");
  const auto a = evaluate(p, 0.5, 0.5, SecondFormDetConvention::AsPrinted);
  const auto b = evaluate(p, 0.5, 0.5, SecondFormDetConvention::Signed);
  ASSERT_TRUE(a.K_II && b.K_II);
  const Scalar eg = a.ff.e * a.ff.g, f2 = a.ff.f * a.ff.f;
  const Scalar ratio = std::pow((std::abs(eg.real()) - f2) / (eg - f2), 2.0);
  expect_scalar(*b.K_II, *a.K_II * ratio, 1e-12, "K_II");
}

TEST(Surface, ExcludedPointRaises) {
  const SurfacePatch p = build("rev1", {{"a", 3}, {"b", 1}});
  EXPECT_THROW(evaluate(p, 0, -2), ExcludedPoint);
}

TEST(Grid, RowMajorInTThenS) {
  const auto pts = grid_points(Rect{0, 1, 0, 1}, GridSpec{3, 2, 0});
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[1].s, 0.5);
  EXPECT_EQ(pts[1].t, 0.0);
  EXPECT_EQ(pts[3].t, 1.0);
  const auto gap = grid_points(Rect{0, 1, -1, 1, false, 0.1}, GridSpec{2, 3, 0});
  EXPECT_EQ(gap.size(), 4u);
}
