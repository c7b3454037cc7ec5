#pragma once

// Named claims with PASS / FAIL / FLAGGED verdicts. Every claim records the
// worst residual over its grid and the worst disagreement between the jet
// engine and the finite-difference engine at a few seeded points.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "surfrev/catalog.hpp"
#include "surfrev/fd_geometry.hpp"
#include "surfrev/ruled.hpp"

namespace surfrev {

enum class Verdict { Pass, Fail, Flagged };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Flagged: return "FLAGGED";
  }
  return "?";
}

struct SurfaceRef {
  std::string id;
  Params params;
};

struct ClaimResult {
  std::string claim_id;
  std::vector<SurfaceRef> surfaces;
  GridSpec grid;
  double tolerance = 0;
  double max_residual = 0;
  double engine_agreement = 0;
  Verdict verdict = Verdict::Fail;
  std::string notes;
  std::map<std::string, double> metrics;
};

inline constexpr double kOracleTolerance = 1e-6;

struct VerifyOptions {
  GridSpec grid;
  double tol = 1e-8;
  /// Used where a check is specified tighter than the general tolerance
  /// (|H|, <N,N>, same-coordinate metrics). Capped by tol.
  double strict_tol = 1e-10;
  std::uint64_t seed = 42;
  int agreement_points = 8;
  double oracle_tol = kOracleTolerance;
  /// Parameter overrides; each surface takes the names it knows.
  Params params;
  SecondFormDetConvention conv = SecondFormDetConvention::AsPrinted;

  double strict() const { return std::min(strict_tol, tol); }
};

namespace detail {

inline Params params_for(const std::string& id, const Params& overrides, const Params& fixed = {}) {
  const auto& e = find_entry(id);
  Params given;
  for (const auto& [k, v] : overrides)
    if (e.default_params.count(k)) given[k] = v;
  for (const auto& [k, v] : fixed) given[k] = v;
  return resolve_params(e, given);
}

/// Verdict from residual, agreement and whether the printed statement
/// asserts the property.
inline Verdict decide(double residual, double tol, double agreement, double oracle_tol,
                      bool asserted) {
  if (!(agreement <= oracle_tol)) return Verdict::Fail;
  if (residual <= tol) return Verdict::Pass;
  return asserted ? Verdict::Flagged : Verdict::Fail;
}

inline void finish(ClaimResult& r, const VerifyOptions& o, bool asserted) {
  r.verdict = decide(r.max_residual, r.tolerance, r.engine_agreement, o.oracle_tol, asserted);
  if (r.verdict == Verdict::Fail && !(r.engine_agreement <= o.oracle_tol)) {
    r.notes += (r.notes.empty() ? "" : "; ") + std::string("engines disagree");
  }
  if (r.verdict == Verdict::Flagged) {
    r.notes += (r.notes.empty() ? "" : "; ") +
               std::string("printed statement contradicted by both engines");
  }
}

inline void fail_with(ClaimResult& r, const std::string& why) {
  r.verdict = Verdict::Fail;
  r.max_residual = std::numeric_limits<double>::infinity();
  r.notes += (r.notes.empty() ? "" : "; ") + why;
}

inline std::string at(double s, double t) {
  return "(" + fmt_num(s) + ", " + fmt_num(t) + ")";
}

using Picker = std::function<bool(const std::string&)>;

inline bool any_quantity(const std::string&) { return true; }

/// Worst jet-vs-oracle difference at seeded points, over the quantities
/// accepted by pick.
inline double engine_agreement(const SurfacePatch& p, const VerifyOptions& o,
                               const Picker& pick = any_quantity) {
  double worst = 0;
  for (const auto& [s, t] : seeded_points(p, o.agreement_points, o.seed)) {
    const auto jet = evaluate(p, s, t, o.conv);
    const auto fd = fd_evaluate(p, s, t, kDefaultFdStep, o.conv);
    for (const auto& [name, d] : engine_differences(jet, fd))
      if (pick(name)) worst = std::max(worst, d);
  }
  return worst;
}

inline Picker one_of(std::set<std::string> names) {
  return [names](const std::string& n) { return names.count(n) > 0; };
}

inline ClaimResult start(const std::string& claim, std::vector<SurfaceRef> surfaces,
                         const VerifyOptions& o, double tol) {
  ClaimResult r;
  r.claim_id = claim;
  r.surfaces = std::move(surfaces);
  r.grid = o.grid;
  r.tolerance = tol;
  return r;
}

}  // namespace detail

/// ΔN = kN over the grid; where the entry has a closed-form k, the relative
/// error of the extracted k joins the residual.
inline ClaimResult verify_pointwise_one_type(const std::string& id, const Params& params,
                                             const VerifyOptions& o, bool use_closed_form = true,
                                             bool asserted = true,
                                             const std::optional<Rect>& domain = std::nullopt,
                                             const std::string& claim = "one_type") {
  const auto& e = find_entry(id);
  auto r = detail::start(claim, {{id, params}}, o, o.tol);
  try {
    const SurfacePatch p = domain ? build(id, params, *domain) : build(id, params);
    double res = 0, kerr = 0, kmin = 0, kmax = 0;
    bool first = true, has_closed = false;
    for (const auto& g : grid_points(p.domain, o.grid)) {
      const auto pk = pointwise_k(p, g.s, g.t);
      res = std::max(res, pk.residual);
      const double kr = pk.k.real();
      kmin = first ? kr : std::min(kmin, kr);
      kmax = first ? kr : std::max(kmax, kr);
      first = false;
      if (use_closed_form) {
        if (auto kc = e.closed_form_k(p.params, g.s, g.t)) {
          has_closed = true;
          const double err = *kc != 0 ? std::abs(pk.k - *kc) / std::abs(*kc) : std::abs(pk.k);
          kerr = std::max(kerr, err);
        }
      }
    }
    r.metrics["max_residual_one_type"] = res;
    r.metrics["k_min"] = kmin;
    r.metrics["k_max"] = kmax;
    r.max_residual = res;
    if (has_closed) {
      r.metrics["max_k_relative_error"] = kerr;
      r.max_residual = std::max(res, kerr);
      if (kerr > o.tol) r.notes = "extracted k departs from the closed form";
    }
    r.engine_agreement = detail::engine_agreement(p, o, detail::one_of({"dN1", "dN2", "dN3", "k"}));
    detail::finish(r, o, asserted);
  } catch (const Error& ex) {
    detail::fail_with(r, ex.what());
  }
  return r;
}

/// max |H| over the grid.
inline ClaimResult verify_minimality(const std::string& id, const Params& params,
                                     const VerifyOptions& o, double tol, bool asserted = true,
                                     const std::string& claim = "minimality") {
  auto r = detail::start(claim, {{id, params}}, o, tol);
  try {
    const SurfacePatch p = build(id, params);
    double worst = 0;
    for (const auto& g : grid_points(p.domain, o.grid)) {
      const auto ff = fundamental_forms(p, g.s, g.t);
      worst = std::max(worst, std::abs(mean_curvature(ff)));
    }
    r.metrics["max_abs_H"] = worst;
    r.max_residual = worst;
    r.engine_agreement = detail::engine_agreement(p, o, detail::one_of({"H", "E", "F", "G", "e", "f", "g"}));
    detail::finish(r, o, asserted);
  } catch (const Error& ex) {
    detail::fail_with(r, ex.what());
  }
  return r;
}

/// max |<N,N> - 1| over the grid (bilinear normalization).
inline ClaimResult verify_unit_normal(const std::string& id, const Params& params,
                                      const VerifyOptions& o, const std::string& claim = "unit_normal") {
  auto r = detail::start(claim, {{id, params}}, o, o.strict());
  try {
    const SurfacePatch p = build(id, params);
    double worst = 0;
    for (const auto& g : grid_points(p.domain, o.grid)) {
      const auto n = gauss_map(p, g.s, g.t).N;
      worst = std::max(worst, std::abs(lorentz_dot(n, n) - 1.0));
    }
    r.metrics["max_abs_NN_minus_1"] = worst;
    r.max_residual = worst;
    r.engine_agreement = detail::engine_agreement(p, o, detail::one_of({"N1", "N2", "N3"}));
    detail::finish(r, o, true);
  } catch (const Error& ex) {
    detail::fail_with(r, ex.what());
  }
  return r;
}

/// E, F, G of both surfaces at the same (s, t) over A's domain.
inline ClaimResult verify_isometry_same_coords(const SurfaceRef& A, const SurfaceRef& B,
                                               const VerifyOptions& o, double tol,
                                               bool asserted = true,
                                               const std::string& claim = "isometry") {
  auto r = detail::start(claim, {A, B}, o, tol);
  try {
    const SurfacePatch pa = build(A.id, A.params), pb = build(B.id, B.params);
    double dE = 0, dF = 0, dG = 0;
    for (const auto& g : grid_points(pa.domain, o.grid)) {
      const auto fa = fundamental_forms(pa, g.s, g.t), fb = fundamental_forms(pb, g.s, g.t);
      dE = std::max(dE, std::abs(fa.E - fb.E));
      dF = std::max(dF, std::abs(fa.F - fb.F));
      dG = std::max(dG, std::abs(fa.G - fb.G));
    }
    r.metrics["max_abs_dE"] = dE;
    r.metrics["max_abs_dF"] = dF;
    r.metrics["max_abs_dG"] = dG;
    r.max_residual = std::max({dE, dF, dG});
    const auto pick = detail::one_of({"E", "F", "G"});
    r.engine_agreement =
        std::max(detail::engine_agreement(pa, o, pick), detail::engine_agreement(pb, o, pick));
    detail::finish(r, o, asserted);
  } catch (const Error& ex) {
    detail::fail_with(r, ex.what());
  }
  return r;
}

/// Correspondence t -> φ(t) with E_rev(φ(t)) = E_hel(t), found by bisection
/// over the revolution surface's t-range.
class BourCorrespondence {
 public:
  BourCorrespondence(const SurfacePatch& rev, double s_rev, double lo, double hi, int probes = 400)
      : rev_(rev), s_(s_rev), lo_(lo), hi_(hi) {
    double prev = E(lo);
    int dir = 0;
    for (int i = 1; i <= probes; ++i) {
      const double t = lo + (hi - lo) * i / probes;
      const double cur = E(t);
      const int d = cur > prev ? 1 : (cur < prev ? -1 : 0);
      if (d == 0 || (dir != 0 && d != dir)) {
        throw NonMonotoneE(rev.label + ": E is not strictly monotone near t = " + fmt(t));
      }
      dir = d;
      prev = cur;
    }
  }

  double E(double t) const { return fundamental_forms(rev_, s_, t).E.real(); }

  double operator()(double target) const {
    double a = lo_, b = hi_;
    double ea = E(a) - target, eb = E(b) - target;
    if (ea == 0) return a;
    if (eb == 0) return b;
    if ((ea > 0) == (eb > 0)) {
      throw BisectionFailure("E = " + fmt(target) + " is outside [" + fmt(std::min(E(lo_), E(hi_))) +
                             ", " + fmt(std::max(E(lo_), E(hi_))) + "]");
    }
    for (int i = 0; i < 200 && b - a > 4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(a));
         ++i) {
      const double m = 0.5 * (a + b);
      const double em = E(m) - target;
      if (em == 0) return m;
      if ((em > 0) == (ea > 0)) {
        a = m;
        ea = em;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  }

 private:
  static std::string fmt(double v) { return detail::fmt_num(v); }
  const SurfacePatch& rev_;
  double s_, lo_, hi_;
};

/// Bour-type correspondence between a helicoid and a surface of revolution:
/// diagonal metrics with E depending on t alone, then intrinsic curvature and
/// G matched through φ.
inline ClaimResult bour_match(const SurfaceRef& hel, const SurfaceRef& rev, const VerifyOptions& o,
                              double tol, bool asserted = true, const std::string& claim = "bour") {
  auto r = detail::start(claim, {hel, rev}, o, tol);
  try {
    const SurfacePatch ph = build(hel.id, hel.params), pr = build(rev.id, rev.params);
    // Preconditions on both metrics.
    double maxF = 0, maxEs = 0;
    for (const SurfacePatch* p : {&ph, &pr}) {
      const Rect& d = p->domain;
      for (const auto& g : grid_points(d, {5, o.grid.nt, o.grid.shrink})) {
        const auto ff = fundamental_forms(*p, g.s, g.t);
        const auto ref = fundamental_forms(*p, 0.5 * (d.s_lo + d.s_hi), g.t);
        maxF = std::max(maxF, std::abs(ff.F));
        maxEs = std::max(maxEs, std::abs(ff.E - ref.E));
      }
    }
    r.metrics["max_abs_F"] = maxF;
    r.metrics["max_E_s_variation"] = maxEs;
    if (maxF > tol || maxEs > tol) {
      detail::fail_with(r, "metric not diagonal with E = E(t)");
      r.max_residual = std::max(maxF, maxEs);
      return r;
    }

    const Rect& dh = ph.domain;
    const Rect& dr = pr.domain;
    const double sh = 0.5 * (dh.s_lo + dh.s_hi), sr = 0.5 * (dr.s_lo + dr.s_hi);
    const BourCorrespondence phi(pr, sr, dr.t_lo, dr.t_hi);
    const double delta = 1e-4;
    double dK = 0, dG = 0, dphi = 0;
    for (const auto& g : grid_points(dh, {1, o.grid.nt, o.grid.shrink})) {
      const double t = g.t;
      const double Eh = fundamental_forms(ph, sh, t).E.real();
      const double p0 = phi(Eh);
      const double pp = phi(fundamental_forms(ph, sh, t + delta).E.real());
      const double pm = phi(fundamental_forms(ph, sh, t - delta).E.real());
      const double dp = (pp - pm) / (2 * delta);
      const Scalar Kh = gaussian_curvature_intrinsic(ph, sh, t);
      const Scalar Kr = gaussian_curvature_intrinsic(pr, sr, p0);
      const Scalar Gh = fundamental_forms(ph, sh, t).G;
      const Scalar Gr = fundamental_forms(pr, sr, p0).G;
      dK = std::max(dK, std::abs(Kh - Kr));
      dG = std::max(dG, std::abs(Gh - Gr * (dp * dp)));
      dphi = std::max(dphi, std::abs(p0 - t));
    }
    r.metrics["max_abs_dK_int"] = dK;
    r.metrics["max_abs_dG_phi"] = dG;
    r.metrics["max_phi_identity_deviation"] = dphi;
    r.max_residual = std::max(dK, dG);
    if (dK > tol) r.notes = "intrinsic curvatures differ under the correspondence";
    if (dG > tol) r.notes += std::string(r.notes.empty() ? "" : "; ") + "G_hel != G_rev phi'^2";
    const auto pick = detail::one_of({"E", "F", "G", "K_int"});
    r.engine_agreement =
        std::max(detail::engine_agreement(ph, o, pick), detail::engine_agreement(pr, o, pick));
    detail::finish(r, o, asserted);
  } catch (const Error& ex) {
    detail::fail_with(r, ex.what());
  }
  return r;
}

/// N_A and N_B at identity-matched coordinates, up to one global sign.
inline ClaimResult verify_same_gauss_map(const SurfaceRef& A, const SurfaceRef& B,
                                         const VerifyOptions& o, double tol, bool asserted = true,
                                         const std::optional<Rect>& domain = std::nullopt,
                                         const std::string& claim = "same_gauss_map") {
  auto r = detail::start(claim, {A, B}, o, tol);
  try {
    const SurfacePatch pa = domain ? build(A.id, A.params, *domain) : build(A.id, A.params);
    const SurfacePatch pb = domain ? build(B.id, B.params, *domain) : build(B.id, B.params);
    double plus = 0, minus = 0;
    for (const auto& g : grid_points(pa.domain, o.grid)) {
      const auto na = gauss_map(pa, g.s, g.t).N, nb = gauss_map(pb, g.s, g.t).N;
      for (int c = 0; c < 3; ++c) {
        plus = std::max(plus, std::abs(na[c] - nb[c]));
        minus = std::max(minus, std::abs(na[c] + nb[c]));
      }
    }
    r.metrics["max_abs_dN_same_sign"] = plus;
    r.metrics["max_abs_dN_opposite_sign"] = minus;
    r.max_residual = std::min(plus, minus);
    r.notes = "coordinates matched by identity";
    const auto pick = detail::one_of({"N1", "N2", "N3"});
    r.engine_agreement =
        std::max(detail::engine_agreement(pa, o, pick), detail::engine_agreement(pb, o, pick));
    detail::finish(r, o, asserted);
  } catch (const Error& ex) {
    detail::fail_with(r, ex.what());
  }
  return r;
}

/// Classification of a ruled decomposition against the expected type.
inline ClaimResult verify_ruled_type(const std::string& id, const Params& params, double offset,
                                     RuledType expected, const VerifyOptions& o,
                                     const std::string& claim = "ruled_type") {
  auto r = detail::start(claim, {{id, params}}, o, 0);
  try {
    const auto rs = ruled_from_catalog(id, params, offset);
    std::vector<double> ss;
    for (const auto& g : grid_points(rs.domain, {o.grid.ns, 1, o.grid.shrink})) ss.push_back(g.s);
    const RuledType got = classify_ruled(rs, ss);
    r.notes = "type " + to_string(got) + ", expected " + to_string(expected);
    if (offset != 0) r.notes += ", base curve offset " + detail::fmt_num(offset);
    r.metrics["type_matches"] = got == expected ? 1 : 0;
    r.max_residual = got == expected ? 0 : 1;
    // Tangent data of the curves against finite differences.
    double worst = 0;
    for (const auto& [s, t] : seeded_points(rs.patch(), o.agreement_points, o.seed)) {
      (void)t;
      auto av = [&](long double a, long double) { return rs.alpha_value(ValueScalar(a)); };
      auto bv = [&](long double a, long double) { return rs.beta_value(ValueScalar(a)); };
      const auto fa = fd_partial(av, static_cast<long double>(s), 0.0L, 1, 0);
      const auto fb = fd_partial(bv, static_cast<long double>(s), 0.0L, 1, 0);
      const auto ja = rs.alpha_prime(s), jb = rs.beta_prime(s);
      for (int c = 0; c < 3; ++c) {
        worst = std::max(worst, agreement(ja[c], Scalar(static_cast<double>(fa[c].real()),
                                                        static_cast<double>(fa[c].imag()))));
        worst = std::max(worst, agreement(jb[c], Scalar(static_cast<double>(fb[c].real()),
                                                        static_cast<double>(fb[c].imag()))));
      }
    }
    r.engine_agreement = worst;
    detail::finish(r, o, false);
  } catch (const Error& ex) {
    detail::fail_with(r, ex.what());
  }
  return r;
}

/// One curvature combination constant along every ruling of a decomposition.
inline ClaimResult verify_constancy(const std::string& id, const Params& params, double offset,
                                    const CurvatureCombo& combo, const VerifyOptions& o,
                                    const std::string& claim = "constancy") {
  auto r = detail::start(claim, {{id, params}}, o, o.tol);
  try {
    const auto rs = ruled_from_catalog(id, params, offset);
    const Rect cat = find_entry(id).default_domain(rs.params);
    std::vector<double> ss, ts;
    for (const auto& g : grid_points(rs.domain, {std::min(o.grid.ns, 16), 1, o.grid.shrink}))
      ss.push_back(g.s);
    for (const auto& g : grid_points(rs.domain, {1, std::min(o.grid.nt, 16), o.grid.shrink}))
      if (std::abs(g.t + rs.t_offset) >= cat.t_gap) ts.push_back(g.t);
    const auto c = constancy_along_rulings(rs, combo, ts, ss, o.tol, o.conv);
    r.metrics["max_ruling_spread"] = c.max_deviation;
    r.metrics["c_KII"] = combo.c_KII;
    r.metrics["c_H"] = combo.c_H;
    r.metrics["c_K"] = combo.c_K;
    r.max_residual = c.max_deviation;
    r.notes = c.family.empty() ? c.family_note : "family " + c.family;
    const bool kii = combo.c_KII != 0;
    r.engine_agreement = detail::engine_agreement(
        rs.patch(), o, detail::one_of(kii ? std::set<std::string>{"H", "K", "K_II"}
                                          : std::set<std::string>{"H", "K"}));
    detail::finish(r, o, !c.family.empty());
    if (c.family.empty() && r.verdict == Verdict::Pass) r.verdict = Verdict::Fail;
  } catch (const Error& ex) {
    detail::fail_with(r, ex.what());
  }
  return r;
}

struct SuiteMember {
  std::string id;
  Params fixed;
  std::string label;
};

inline std::vector<SuiteMember> revolution_suite() {
  return {{"rev1", {}, "rev1"},
          {"rev2s", {}, "rev2s"},
          {"rev2t", {}, "rev2t"},
          {"rev3", {}, "rev3"},
          {"rev3", {{"real_variant", 1}}, "rev3[real_variant=1]"},
          {"enneper_rev2", {}, "enneper_rev2"},
          {"enneper_rev3", {}, "enneper_rev3"},
          {"torus_control", {}, "torus_control"}};
}

/// For every revolution surface (and the torus control): pointwise 1-type
/// holds exactly when the surface is minimal. One row per surface; the row's
/// verdict is that of the equivalence, the two sub-verdicts are in the notes.
inline std::vector<ClaimResult> verify_prop18_suite(const VerifyOptions& o) {
  std::vector<ClaimResult> out;
  for (const auto& m : revolution_suite()) {
    const Params p = detail::params_for(m.id, o.params, m.fixed);
    const auto one = verify_pointwise_one_type(m.id, p, o, false, false);
    const auto min = verify_minimality(m.id, p, o, o.tol, false);
    auto r = detail::start("prop18.equivalence[" + m.label + "]", {{m.id, p}}, o, 0);
    const bool a = one.verdict == Verdict::Pass, b = min.verdict == Verdict::Pass;
    r.metrics = {{"max_residual_one_type", one.max_residual},
                 {"max_abs_H", min.max_residual},
                 {"one_type_pass", a ? 1.0 : 0.0},
                 {"minimality_pass", b ? 1.0 : 0.0}};
    r.max_residual = a == b ? 0 : 1;
    r.engine_agreement = std::max(one.engine_agreement, min.engine_agreement);
    r.notes = "one_type " + to_string(one.verdict) + ", minimality " + to_string(min.verdict);
    if (!one.notes.empty()) r.notes += "; one_type: " + one.notes;
    if (!min.notes.empty()) r.notes += "; minimality: " + min.notes;
    detail::finish(r, o, false);
    out.push_back(std::move(r));
  }
  return out;
}

// --- claim groups ---------------------------------------------------------

inline const std::vector<std::string>& claim_groups() {
  static const std::vector<std::string> g = {"prop6",  "prop7",  "prop8",  "prop9", "prop10",
                                             "prop11", "prop12", "prop13", "prop18"};
  return g;
}

namespace detail {

inline void rename(ClaimResult& r, const std::string& group, const std::string& what,
                   const std::string& subject) {
  r.claim_id = group + "." + what + "[" + subject + "]";
}

inline std::vector<ClaimResult> revolution_group(const std::string& group, const std::string& rev,
                                                 const std::string& hel, const VerifyOptions& o) {
  std::vector<ClaimResult> out;
  const Params pr = params_for(rev, o.params), ph = params_for(hel, o.params);
  // Builds first so constraint violations surface as errors, not verdicts.
  build(hel, ph);
  build(rev, pr);
  out.push_back(verify_pointwise_one_type(rev, pr, o));
  rename(out.back(), group, "one_type", rev);
  out.push_back(verify_minimality(rev, pr, o, o.strict()));
  rename(out.back(), group, "minimality", rev);
  if (find_entry(rev).norm_mode == NormMode::Bilinear && pr.at("real_variant") == 0) {
    out.push_back(verify_unit_normal(rev, pr, o));
    rename(out.back(), group, "unit_normal", rev);
  }
  out.push_back(verify_isometry_same_coords({hel, ph}, {rev, pr}, o, o.strict()));
  rename(out.back(), group, "isometry", hel + "," + rev);
  out.push_back(bour_match({hel, ph}, {rev, pr}, o, o.tol));
  rename(out.back(), group, "bour", hel + "," + rev);
  return out;
}

inline std::vector<ClaimResult> enneper_group(const VerifyOptions& o) {
  std::vector<ClaimResult> out;
  const std::string g = "prop10";
  const Params pc = params_for("enneper_conj2", o.params);
  const Params p2 = params_for("enneper_rev2", o.params), p3 = params_for("enneper_rev3", o.params);
  build("enneper_conj2", pc);
  build("enneper_rev2", p2);
  build("enneper_rev3", p3);
  for (const auto& [id, p] : {std::pair{"enneper_rev2", p2}, std::pair{"enneper_rev3", p3}}) {
    out.push_back(verify_minimality(id, p, o, o.tol));
    rename(out.back(), g, "minimality", id);
    out.push_back(verify_pointwise_one_type(id, p, o));
    rename(out.back(), g, "one_type", id);
  }
  out.push_back(verify_minimality("enneper_conj2", pc, o, o.tol));
  rename(out.back(), g, "minimality", "enneper_conj2");
  out.push_back(verify_pointwise_one_type("enneper_conj2", pc, o));
  rename(out.back(), g, "one_type", "enneper_conj2");
  // The conjugate surface is space-like where ht < 0 and time-like where ht > 0.
  const Rect full = find_entry("enneper_conj2").default_domain(pc);
  const double h = pc.at("h");
  Rect spacelike = full, timelike = full;
  if (h > 0) {
    spacelike.t_hi = -full.t_gap;
    timelike.t_lo = full.t_gap;
  } else {
    spacelike.t_lo = full.t_gap;
    timelike.t_hi = -full.t_gap;
  }
  out.push_back(verify_same_gauss_map({"enneper_conj2", pc}, {"enneper_rev2", p2}, o, o.tol, true,
                                      spacelike));
  rename(out.back(), g, "same_gauss_map", "enneper_conj2,enneper_rev2");
  out.back().notes += "; conjugate restricted to its space-like half";
  out.push_back(verify_same_gauss_map({"enneper_conj2", pc}, {"enneper_rev3", p3}, o, o.tol, true,
                                      timelike));
  rename(out.back(), g, "same_gauss_map", "enneper_conj2,enneper_rev3");
  out.back().notes += "; conjugate restricted to its time-like half";
  return out;
}

inline std::vector<CurvatureCombo> ruling_combos() {
  return {{0, 1, 0}, {1, 1, 0}};
}

inline std::string combo_label(const CurvatureCombo& c) {
  return "KII=" + fmt_num(c.c_KII) + ",H=" + fmt_num(c.c_H) + ",K=" + fmt_num(c.c_K);
}

inline std::vector<ClaimResult> ruled_group(
    const std::string& group, const std::vector<std::tuple<std::string, double, RuledType>>& items,
    const VerifyOptions& o) {
  std::vector<ClaimResult> out;
  for (const auto& [id, offset, expected] : items) {
    const Params p = params_for(id, o.params);
    build(id, p);
    const std::string subject = offset == 0 ? id : id + ",offset=" + fmt_num(offset);
    out.push_back(verify_ruled_type(id, p, offset, expected, o));
    rename(out.back(), group, "ruled_type", subject);
    for (const auto& c : ruling_combos()) {
      out.push_back(verify_constancy(id, p, offset, c, o));
      rename(out.back(), group, "constancy", subject + ";" + combo_label(c));
    }
  }
  return out;
}

/// Rejects unknown names and overrides that break an entry's constraints
/// before any claim runs.
inline void check_param_names(const std::vector<std::string>& ids, const Params& given) {
  for (const auto& [k, v] : given) {
    bool known = false;
    for (const auto& id : ids) known = known || find_entry(id).default_params.count(k) > 0;
    if (!known) throw ConstraintViolation("parameter '" + k + "' is not used by this claim");
  }
  for (const auto& id : ids) find_entry(id).validate(params_for(id, given));
}

}  // namespace detail

namespace detail {

inline std::vector<std::string> group_surfaces(const std::string& g) {
  if (g == "prop6") return {"rev1", "hel1"};
  if (g == "prop7") return {"rev2s", "hel2s"};
  if (g == "prop8") return {"rev2t", "hel2t"};
  if (g == "prop9") return {"rev3", "hel3"};
  if (g == "prop10") return {"enneper_conj2", "enneper_rev2", "enneper_rev3"};
  if (g == "prop11") return {"hel1", "hel2s", "hel3"};
  if (g == "prop12") return {"hel2t"};
  if (g == "prop13") return {"enneper_conj2"};
  if (g == "prop18") {
    std::vector<std::string> ids;
    for (const auto& m : revolution_suite()) ids.push_back(m.id);
    return ids;
  }
  throw UnknownEntry("no claim group '" + g + "'");
}

inline std::vector<ClaimResult> run_group(const std::string& g, const VerifyOptions& o) {
  if (g == "prop6") return revolution_group(g, "rev1", "hel1", o);
  if (g == "prop7") return revolution_group(g, "rev2s", "hel2s", o);
  if (g == "prop8") return revolution_group(g, "rev2t", "hel2t", o);
  if (g == "prop9") return revolution_group(g, "rev3", "hel3", o);
  if (g == "prop10") return enneper_group(o);
  if (g == "prop11")
    return ruled_group(g,
                       {{"hel1", 0.0, RuledType::M1plus},
                        {"hel2s", 0.0, RuledType::M1plus},
                        {"hel3", 0.0, RuledType::M3plus}},
                       o);
  if (g == "prop12") return ruled_group(g, {{"hel2t", 0.0, RuledType::M1minus}}, o);
  if (g == "prop13") {
    // α + cβ has <α',α'> = -4hc, so the sign of c picks M2plus or M2minus.
    const double h = params_for("enneper_conj2", o.params).at("h");
    const double c = h > 0 ? 1.0 : -1.0;
    return ruled_group(g,
                       {{"enneper_conj2", -c, RuledType::M2plus},
                        {"enneper_conj2", c, RuledType::M2minus}},
                       o);
  }
  if (g == "prop18") return verify_prop18_suite(o);
  throw UnknownEntry("no claim group '" + g + "'");
}

}  // namespace detail

/// Runs one claim group, or every group for "all". Parameter overrides apply
/// to every surface that has a parameter of that name.
inline std::vector<ClaimResult> run_claims(const std::string& group, const VerifyOptions& o) {
  if (group == "all") {
    std::vector<std::string> every;
    for (const auto& e : list_entries()) every.push_back(e.id);
    detail::check_param_names(every, o.params);
    std::vector<ClaimResult> out;
    for (const auto& g : claim_groups()) {
      auto sub = detail::run_group(g, o);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  detail::check_param_names(detail::group_surfaces(group), o.params);
  return detail::run_group(group, o);
}

/// 0 when every claim passes, 1 on any FAIL, 2 when the rest are FLAGGED.
inline int exit_code(const std::vector<ClaimResult>& rs) {
  bool flagged = false;
  for (const auto& r : rs) {
    if (r.verdict == Verdict::Fail) return 1;
    flagged = flagged || r.verdict == Verdict::Flagged;
  }
  return flagged ? 2 : 0;
}

}  // namespace surfrev
