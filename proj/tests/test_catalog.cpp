#include <cmath>

#include <gtest/gtest.h>

#include "surfrev/catalog.hpp"

using namespace surfrev;

TEST(Catalog, TwelveEntriesInFixedOrder) {
  const std::vector<std::string> want = {"rev1",  "rev2s", "rev2t",         "rev3",         "hel1",         "hel2s",
                                         "hel2t", "hel3",  "enneper_conj2", "enneper_rev2", "enneper_rev3", "torus_control"};
  const auto& entries = list_entries();
  ASSERT_EQ(entries.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(entries[i].id, want[i]);
    EXPECT_FALSE(entries[i].constraint_text.empty()) << want[i];
  }
}

TEST(Catalog, DefaultsSatisfyOwnConstraints) {
  for (const auto& e : list_entries()) {
    EXPECT_NO_THROW(e.validate(e.default_params)) << e.id;
    EXPECT_NO_THROW(build(e.id)) << e.id;
  }
}

TEST(Catalog, ComplexifiedEntryUsesBilinearNorm) {
  EXPECT_EQ(find_entry("rev3").norm_mode, NormMode::Bilinear);
  EXPECT_EQ(find_entry("rev1").norm_mode, NormMode::Absolute);
}

TEST(Catalog, ConstraintViolationQuotesInequality) {
  try {
    build("hel1", {{"a", 1}, {"b", 1}});
    FAIL() << "expected ConstraintViolation";
  } catch (const ConstraintViolation& e) {
    EXPECT_NE(std::string(e.what()).find("|a|>|b|>0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(build("hel1", {{"a", 3}, {"b", 0}}), ConstraintViolation);
  EXPECT_THROW(build("torus_control", {{"R", 1}, {"r", 2}}), ConstraintViolation);
  EXPECT_THROW(build("enneper_conj2", {{"h", 0}}), ConstraintViolation);
  EXPECT_THROW(build("rev3", {{"real_variant", 2}}), ConstraintViolation);
}

TEST(Catalog, InfeasibleInverseFunctionDomains) {
  EXPECT_THROW(build("rev2t", {{"a", 3}, {"b", 1}}), InfeasibleDomain);
  EXPECT_THROW(build("rev2s", {{"a", 0}, {"b", 0}}), InfeasibleDomain);
}

TEST(Catalog, UnknownIdsAndParameters) {
  EXPECT_THROW(find_entry("rev9"), UnknownEntry);
  EXPECT_THROW(build("rev1", {{"q", 1}}), ConstraintViolation);
}

TEST(Catalog, FirstKindDomain) {
  const SurfacePatch p = build("rev1", {{"a", 3}, {"b", 1}});
  EXPECT_DOUBLE_EQ(p.domain.t_lo, 0.5);
  EXPECT_DOUBLE_EQ(p.domain.t_hi, 3.0);
  EXPECT_DOUBLE_EQ(p.domain.s_lo, 0.0);
  EXPECT_NEAR(p.domain.s_hi, 2 * M_PI, 1e-15);
  EXPECT_TRUE(p.domain.s_periodic);
  EXPECT_TRUE(p.excluded(0, -2.5).has_value());
}

TEST(Catalog, TimeLikeSecondKindFeasibility) {
  const SurfacePatch p = build("rev2t", {{"a", 3}, {"b", -1}});
  const double edge = std::sqrt(2.0) - 3;
  EXPECT_TRUE(p.excluded(0, edge - 1e-6).has_value());
  EXPECT_FALSE(p.excluded(0, edge + 1e-6).has_value());
  EXPECT_GE(p.domain.t_lo, edge);
}

TEST(Catalog, ReferenceNormalsRoundTrip) {
  for (const auto& e : list_entries()) {
    const Params p = e.default_params;
    const auto ref = e.reference(p);
    if (!ref) continue;
    const auto n = gauss_map(build(e.id), ref->s, ref->t).N;
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(std::abs(n[c] - ref->n[c]), 0.0, 1e-10) << e.id << " component " << c + 1;
  }
}

TEST(Catalog, GaussMapExistsOnDefaultGrids) {
  for (const auto& e : list_entries()) {
    const SurfacePatch p = build(e.id);
    int evaluated = 0;
    for (const auto& pt : grid_points(p.domain, GridSpec{})) {
      if (p.excluded(pt.s, pt.t)) continue;
      EXPECT_NO_THROW(gauss_map(p, pt.s, pt.t)) << e.id << " at " << pt.s << "," << pt.t;
      ++evaluated;
    }
    EXPECT_GE(evaluated, 64 * 60) << e.id;
  }
}

TEST(Catalog, ConjugateEnneperDeterminant) {
  const double h = 1.5;
  const SurfacePatch p = build("enneper_conj2", {{"h", h}});
  for (double s : {-0.7, 0.0, 0.4})
    for (double t : {-1.2, -0.3, 0.2, 1.1}) {
      const auto ff = fundamental_forms(p, s, t);
      EXPECT_NEAR(std::abs(ff.detg - (-4 * h * t)), 0.0, 1e-12);
    }
  EXPECT_TRUE(p.excluded(0.1, 0).has_value());
}

TEST(Catalog, ThirdKindRealVariantMetric) {
  const SurfacePatch p = build("rev3", {{"a", 0}, {"b", 1}, {"real_variant", 1}});
  const double u = 0.5;
  const auto ff = fundamental_forms(p, 0.2, u);
  EXPECT_NEAR(std::abs(ff.G - (1 - u * u) / (1 + u * u)), 0.0, 1e-12);
  const auto c = fundamental_forms(build("rev3", {{"a", 0}, {"b", 1}}), 0.2, u);
  EXPECT_NEAR(std::abs(c.G + 1.0), 0.0, 1e-12);
}

TEST(Catalog, ClosedFormK) {
  const auto& e = find_entry("rev1");
  const Params p = {{"a", 3}, {"b", 1}};
  ASSERT_TRUE(e.closed_form_k(p, 0, 0).has_value());
  EXPECT_DOUBLE_EQ(*e.closed_form_k(p, 0, 0), -1.0 / 32);
  EXPECT_FALSE(find_entry("torus_control").closed_form_k(find_entry("torus_control").default_params, 0, 0));
}
