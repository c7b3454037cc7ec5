#include <gtest/gtest.h>

#include "surfrev/claims.hpp"

using namespace surfrev;

namespace {

VerifyOptions small() {
  VerifyOptions o;
  o.grid = GridSpec{16, 16, 0.02};
  return o;
}

}  // namespace

TEST(Verdict, Decision) {
  EXPECT_EQ(detail::decide(1e-12, 1e-8, 1e-9, 1e-6, true), Verdict::Pass);
  EXPECT_EQ(detail::decide(1e-3, 1e-8, 1e-9, 1e-6, true), Verdict::Flagged);
  EXPECT_EQ(detail::decide(1e-3, 1e-8, 1e-9, 1e-6, false), Verdict::Fail);
  EXPECT_EQ(detail::decide(0, 1e-8, 1e-3, 1e-6, true), Verdict::Fail);
}

TEST(OneType, FirstKindWithClosedForm) {
  const auto r = verify_pointwise_one_type("rev1", {{"a", 3}, {"b", 1}}, small());
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.notes;
  EXPECT_LE(r.max_residual, 1e-8);
  EXPECT_LE(r.engine_agreement, 1e-6);
  EXPECT_EQ(r.surfaces.at(0).id, "rev1");
}

TEST(OneType, TorusFails) {
  const auto r = verify_pointwise_one_type("torus_control", {{"R", 2}, {"r", 0.5}}, small(), true, false);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_GT(r.max_residual, 0.01);
}

TEST(OneType, ConjugateEnneper) {
  const auto r = verify_pointwise_one_type("enneper_conj2", {{"h", 1}}, small());
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.notes;
}

TEST(Minimality, Examples) {
  const auto o = small();
  EXPECT_EQ(verify_minimality("rev1", {{"a", 3}, {"b", 1}}, o, 1e-10).verdict, Verdict::Pass);
  EXPECT_EQ(verify_minimality("rev3", {{"a", 0}, {"b", 1}}, o, 1e-10).verdict, Verdict::Pass);
  const auto t = verify_minimality("torus_control", {}, o, 1e-8, false);
  EXPECT_EQ(t.verdict, Verdict::Fail);
  EXPECT_GT(t.max_residual, 0.1);
}

TEST(Isometry, SameCoordinates) {
  const auto o = small();
  EXPECT_EQ(verify_isometry_same_coords({"hel1", {{"a", 3}, {"b", 1}}}, {"rev1", {{"a", 3}, {"b", 1}}}, o, 1e-10).verdict,
            Verdict::Pass);
  EXPECT_EQ(verify_isometry_same_coords({"hel3", {{"a", 0}, {"b", 1}}}, {"rev3", {{"a", 0}, {"b", 1}}}, o, 1e-10).verdict,
            Verdict::Pass);
  const auto t = verify_isometry_same_coords({"hel2t", {{"a", 3}, {"b", -1}}}, {"rev2t", {{"a", 3}, {"b", -1}}}, o, 1e-10);
  EXPECT_EQ(t.verdict, Verdict::Flagged);
  EXPECT_LE(t.engine_agreement, 1e-6);
}

TEST(Bour, IdentityCorrespondence) {
  const auto r = bour_match({"hel1", {{"a", 3}, {"b", 1}}}, {"rev1", {{"a", 3}, {"b", 1}}}, small(), 1e-8);
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.notes;
  EXPECT_LE(r.metrics.at("max_phi_identity_deviation"), 1e-8);
  const auto s = bour_match({"hel2s", {{"a", 0}, {"b", 2}}}, {"rev2s", {{"a", 0}, {"b", 2}}}, small(), 1e-8);
  EXPECT_EQ(s.verdict, Verdict::Pass) << s.notes;
}

TEST(Bour, NonMonotoneMetricIsRejected) {
  // E = (t+a)² + b² turns around at t = -a.
  const SurfacePatch rev = build("rev3", {{"a", 0}, {"b", 1}}, Rect{-1, 1, -0.5, 0.5});
  EXPECT_THROW(BourCorrespondence(rev, 0, -0.5, 0.5), NonMonotoneE);
  const SurfacePatch ok = build("rev1", {{"a", 3}, {"b", 1}});
  const BourCorrespondence phi(ok, 0, 0.5, 3);
  EXPECT_NEAR(phi(phi.E(1.25)), 1.25, 1e-12);
  EXPECT_THROW(phi(1e6), BisectionFailure);
}

TEST(SameGaussMap, SelfAndDistinct) {
  const auto o = small();
  EXPECT_EQ(verify_same_gauss_map({"rev1", {}}, {"rev1", {}}, o, 1e-10).verdict, Verdict::Pass);
  const auto d = verify_same_gauss_map({"rev1", {}}, {"rev2s", {}}, o, 1e-10, false);
  EXPECT_EQ(d.verdict, Verdict::Fail);
}

TEST(RuledClaims, TypesAndConstancy) {
  const auto o = small();
  EXPECT_EQ(verify_ruled_type("hel1", {}, 0, RuledType::M1plus, o).verdict, Verdict::Pass);
  EXPECT_EQ(verify_ruled_type("hel1", {}, 0, RuledType::M3plus, o).verdict, Verdict::Fail);
  EXPECT_EQ(verify_constancy("hel1", {}, 0, {0, 1, 0}, o).verdict, Verdict::Pass);
  const auto bad = verify_constancy("hel1", {}, 0, {1, 2, 0}, o);
  EXPECT_EQ(bad.verdict, Verdict::Fail);
  EXPECT_NE(bad.notes.find("2a-b"), std::string::npos);
}

TEST(Suite, EquivalenceRows) {
  const auto rows = verify_prop18_suite(small());
  ASSERT_EQ(rows.size(), revolution_suite().size());
  for (const auto& r : rows) {
    EXPECT_EQ(r.verdict, Verdict::Pass) << r.claim_id << " " << r.notes;
    EXPECT_EQ(r.metrics.at("one_type_pass"), r.metrics.at("minimality_pass")) << r.claim_id;
  }
  const auto& torus = rows.back();
  EXPECT_EQ(torus.claim_id, "prop18.equivalence[torus_control]");
  EXPECT_EQ(torus.metrics.at("one_type_pass"), 0.0);
  EXPECT_GT(torus.metrics.at("max_abs_H"), 0.1);
  EXPECT_GT(torus.metrics.at("max_residual_one_type"), 0.01);
}

TEST(Groups, ConstraintOverridesAreRejectedUpFront) {
  auto o = small();
  o.params = {{"a", 1}, {"b", 1}};
  EXPECT_THROW(run_claims("prop6", o), ConstraintViolation);
  o.params = {{"zz", 1}};
  EXPECT_THROW(run_claims("prop6", o), ConstraintViolation);
  EXPECT_THROW(run_claims("prop99", small()), UnknownEntry);
}

TEST(Groups, DeterministicAndPassing) {
  const auto a = run_claims("prop6", small());
  const auto b = run_claims("prop6", small());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].claim_id, b[i].claim_id);
    EXPECT_EQ(a[i].max_residual, b[i].max_residual);
    EXPECT_EQ(a[i].engine_agreement, b[i].engine_agreement);
  }
  EXPECT_EQ(exit_code(a), 0);
}

TEST(Groups, ExitCodes) {
  ClaimResult p, f, g;
  p.verdict = Verdict::Pass;
  f.verdict = Verdict::Fail;
  g.verdict = Verdict::Flagged;
  EXPECT_EQ(exit_code({p, p}), 0);
  EXPECT_EQ(exit_code({p, g}), 2);
  EXPECT_EQ(exit_code({g, f}), 1);
}

// Residuals and |H| do not depend on which of ±N the catalog picks.
TEST(Orientation, FlipInvariance) {
  for (const char* id : {"rev1", "rev3", "enneper_conj2", "torus_control"}) {
    SurfacePatch p = build(id);
    const auto [s, t] = seeded_points(p, 1, 5).front();
    const auto a = evaluate(p, s, t);
    p.orientation = -p.orientation;
    const auto b = evaluate(p, s, t);
    EXPECT_NEAR(a.residual, b.residual, 1e-12) << id;
    EXPECT_NEAR(std::abs(a.H), std::abs(b.H), 1e-12) << id;
    EXPECT_NEAR(std::abs(a.k - b.k), 0.0, 1e-12) << id;
  }
}
