#pragma once

// Chart-level geometry of a parametric surface in Minkowski 3-space.
//
// Everything here is evaluated from one order-4 jet of the immersion:
//   order 1  E, F, G and the Gauss map N
//   order 2  e, f, g
//   order 3  ΔN (second derivatives of N, first of the metric)
//   order 4  K_II (second derivatives of e, f, g)

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "surfrev/errors.hpp"
#include "surfrev/jet.hpp"
#include "surfrev/lorentz.hpp"
#include "surfrev/scalar.hpp"

namespace surfrev {

using Jet4 = Jet2<Scalar, 4>;
using Params = std::map<std::string, double>;

/// Parameter rectangle [s_lo, s_hi] x [t_lo, t_hi]. Sweeps skip |t| < t_gap.
struct Rect {
  double s_lo = 0, s_hi = 1, t_lo = 0, t_hi = 1;
  bool s_periodic = false;
  double t_gap = 0;
};

class SurfacePatch {
 public:
  using JetChart = std::function<LVec3<Jet4>(const Jet4&, const Jet4&)>;
  using ValueChart = std::function<LVec3<ValueScalar>(const ValueScalar&, const ValueScalar&)>;
  /// Returns a reason when (s, t) lies on the singular set.
  using Exclusion = std::function<std::optional<std::string>(double, double)>;

  std::string label;
  Params params;
  Rect domain;
  NormMode norm_mode = NormMode::Absolute;
  int orientation = 1;
  JetChart jet_chart;
  ValueChart value_chart;
  Exclusion exclusion;

  std::optional<std::string> excluded(double s, double t) const {
    return exclusion ? exclusion(s, t) : std::nullopt;
  }

  void require_admissible(double s, double t) const {
    if (auto why = excluded(s, t)) {
      throw ExcludedPoint(label + " at (" + std::to_string(s) + ", " + std::to_string(t) +
                          "): " + *why);
    }
  }

  LVec3<Jet4> jets(double s, double t) const {
    require_admissible(s, t);
    return jet_chart(Jet4::variable_s(s), Jet4::variable_t(t));
  }

  LVec3<ValueScalar> value(long double s, long double t) const {
    return value_chart(ValueScalar(s), ValueScalar(t));
  }

  double param(const std::string& name) const { return params.at(name); }
};

/// Lifts a real constant into the scalar type of a chart argument.
inline Scalar lit(const Jet4&, double v) { return Scalar(v); }
inline ValueScalar lit(const ValueScalar&, double v) { return ValueScalar(v); }
inline Scalar lit_c(const Jet4&, Scalar v) { return v; }
inline ValueScalar lit_c(const ValueScalar&, Scalar v) {
  return ValueScalar(v.real(), v.imag());
}

/// ∫_{t_base}^{t} integrand(u) du for an integrand of t alone.
///
/// The jet derivatives come from the integrand itself; the value is an
/// adaptive Gauss-Kronrod quadrature and only matters for mesh output.
template <class Integrand>
Jet4 axial_integral(const Jet4& t, Integrand&& integrand, double t_base) {
  const Jet4 g = integrand(t);
  Jet4 r;
  for (int j = 1; j <= 4; ++j) r(0, j) = g(0, j - 1);
  auto f = [&](long double u) { return integrand(ValueScalar(u)); };
  const ValueScalar v = boost::math::quadrature::gauss_kronrod<long double, 31>::integrate(
      f, static_cast<long double>(t_base), static_cast<long double>(t.value().real()), 12,
      1e-15L);
  r(0, 0) = Scalar(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  return r;
}

/// Extended-precision value of the same integral with a fixed 40-point
/// Gauss-Legendre rule; the result is a smooth function of t, which the
/// finite-difference engine relies on.
template <class Integrand>
ValueScalar axial_integral(const ValueScalar& t, Integrand&& integrand, double t_base) {
  auto f = [&](long double u) { return integrand(ValueScalar(u)); };
  return boost::math::quadrature::gauss<long double, 40>::integrate(
      f, static_cast<long double>(t_base), t.real());
}

/// Builds a patch from a chart written once for both scalar kinds.
template <class Chart>
SurfacePatch make_patch(std::string label, Params params, Rect domain, NormMode mode, Chart chart,
                        SurfacePatch::Exclusion exclusion = {}) {
  SurfacePatch p;
  p.label = std::move(label);
  p.params = std::move(params);
  p.domain = domain;
  p.norm_mode = mode;
  p.jet_chart = [chart](const Jet4& s, const Jet4& t) { return chart(s, t); };
  p.value_chart = [chart](const ValueScalar& s, const ValueScalar& t) { return chart(s, t); };
  p.exclusion = std::move(exclusion);
  return p;
}

// --- grids ---------------------------------------------------------------

struct GridSpec {
  int ns = 64;
  int nt = 64;
  double shrink = 0.02;
};

struct GridPoint {
  int i = 0, j = 0;
  double s = 0, t = 0;
};

/// Grid over the domain shrunk by grid.shrink on each side, inclusive of both
/// ends, row-major in t then s. Points inside the t gap are dropped.
inline std::vector<GridPoint> grid_points(const Rect& d, const GridSpec& g) {
  const double ds = (d.s_hi - d.s_lo) * g.shrink, dt = (d.t_hi - d.t_lo) * g.shrink;
  const double s0 = d.s_lo + ds, s1 = d.s_hi - ds, t0 = d.t_lo + dt, t1 = d.t_hi - dt;
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(g.ns) * g.nt);
  for (int j = 0; j < g.nt; ++j) {
    const double t = g.nt == 1 ? 0.5 * (t0 + t1) : t0 + (t1 - t0) * j / (g.nt - 1);
    if (std::abs(t) < d.t_gap) continue;
    for (int i = 0; i < g.ns; ++i) {
      const double s = g.ns == 1 ? 0.5 * (s0 + s1) : s0 + (s1 - s0) * i / (g.ns - 1);
      out.push_back({i, j, s, t});
    }
  }
  return out;
}

// --- pointwise geometry ----------------------------------------------------

struct FundamentalForms {
  Scalar E, F, G;
  Scalar e, f, g;
  Scalar detg;
  std::array<std::array<Scalar, 2>, 2> ginv{};
};

/// Target space form of the Gauss map: de Sitter S²₁(1) for ε = +1,
/// hyperbolic plane H²(-1) for ε = -1.
enum class SpaceForm { DeSitter, Hyperbolic };

struct GaussMapSample {
  LVec3<Scalar> N;
  int epsilon = 1;
  SpaceForm target = SpaceForm::DeSitter;
};

/// Whether the |eg| - f² factor of K_II keeps its absolute value.
enum class SecondFormDetConvention { AsPrinted, Signed };

struct CurvatureSample {
  Scalar H, K_ext, K_int, K_II;
  double s = 0, t = 0;
};

inline double metric_scale(const Scalar& E, const Scalar& F, const Scalar& G) {
  return 1.0 + std::norm(E) + std::norm(F) + std::norm(G);
}

inline void check_metric(const Scalar& E, const Scalar& F, const Scalar& G, const Scalar& det) {
  if (std::abs(det) < 1e-9 * metric_scale(E, F, G)) {
    throw DegenerateMetric("EG - F^2 = " + detail::describe(det));
  }
}

namespace detail {

/// Jets of the immersion and of everything derived from it at one point.
struct Frame {
  LVec3<Jet2<Scalar, 4>> x;
  LVec3<Jet2<Scalar, 3>> xs, xt;
  LVec3<Jet2<Scalar, 3>> N;
  int epsilon = 1;
  Jet2<Scalar, 3> E, F, G;
  Jet2<Scalar, 2> e, f, g;
};

inline double null_tolerance(const LVec3<Scalar>& w) { return 1e-12 * (1.0 + euclid_norm2(w)); }

template <int M>
LVec3<Scalar> values(const LVec3<Jet2<Scalar, M>>& v) {
  return {v.x1.value(), v.x2.value(), v.x3.value()};
}

template <int N, int M>
LVec3<Jet2<Scalar, N>> truncate(const LVec3<Jet2<Scalar, M>>& v) {
  return {v.x1.template truncate<N>(), v.x2.template truncate<N>(), v.x3.template truncate<N>()};
}

inline Frame frame(const SurfacePatch& patch, double s, double t) {
  Frame fr;
  fr.x = patch.jets(s, t);
  fr.xs = fr.x.map([](const Jet4& c) { return c.d_s(); });
  fr.xt = fr.x.map([](const Jet4& c) { return c.d_t(); });

  const auto w = lorentz_cross(fr.xs, fr.xt);
  const auto q = lorentz_dot(w, w);
  const auto wv = values(w);
  if (std::abs(q.value()) <= null_tolerance(wv)) {
    throw NullNormal(patch.label + ": x_s x x_t is light-like at (" + std::to_string(s) + ", " +
                     std::to_string(t) + ")");
  }
  Jet2<Scalar, 3> len;
  if (patch.norm_mode == NormMode::Absolute) {
    if (!is_real(q.value())) {
      throw NonRealVector(patch.label + ": absolute normalization of a complex normal");
    }
    fr.epsilon = real_sign(q.value());
    len = sqrt_principal(q * Scalar(fr.epsilon));
  } else {
    fr.epsilon = 1;
    len = sqrt_principal(q);
  }
  const auto inv = recip(len) * Scalar(patch.orientation);
  fr.N = w.map([&](const Jet2<Scalar, 3>& c) { return c * inv; });

  fr.E = lorentz_dot(fr.xs, fr.xs);
  fr.F = lorentz_dot(fr.xs, fr.xt);
  fr.G = lorentz_dot(fr.xt, fr.xt);

  const auto xss = fr.xs.map([](const Jet2<Scalar, 3>& c) { return c.d_s(); });
  const auto xst = fr.xs.map([](const Jet2<Scalar, 3>& c) { return c.d_t(); });
  const auto xtt = fr.xt.map([](const Jet2<Scalar, 3>& c) { return c.d_t(); });
  const auto n2 = truncate<2>(fr.N);
  fr.e = lorentz_dot(xss, n2);
  fr.f = lorentz_dot(xst, n2);
  fr.g = lorentz_dot(xtt, n2);
  return fr;
}

/// det(A) - det(B) of the Brioschi-type pair of 3x3 matrices built from a
/// symmetric form (P, Q, R) and its derivatives.
inline Scalar brioschi_difference(const Jet2<Scalar, 2>& P, const Jet2<Scalar, 2>& Q,
                                  const Jet2<Scalar, 2>& R) {
  auto det3 = [](const std::array<std::array<Scalar, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const Scalar P0 = P.value(), Q0 = Q.value(), R0 = R.value();
  const Scalar Ps = P(1, 0), Pt = P(0, 1), Ptt = P(0, 2);
  const Scalar Qs = Q(1, 0), Qt = Q(0, 1), Qst = Q(1, 1);
  const Scalar Rs = R(1, 0), Rt = R(0, 1), Rss = R(2, 0);
  const std::array<std::array<Scalar, 3>, 3> a{{
      {-0.5 * Ptt + Qst - 0.5 * Rss, 0.5 * Ps, Qs - 0.5 * Pt},
      {Qt - 0.5 * Rs, P0, Q0},
      {0.5 * Rt, Q0, R0},
  }};
  const std::array<std::array<Scalar, 3>, 3> b{{
      {Scalar(0), 0.5 * Pt, 0.5 * Rs},
      {0.5 * Pt, P0, Q0},
      {0.5 * Rs, Q0, R0},
  }};
  return det3(a) - det3(b);
}

}  // namespace detail

/// Δu = -(1/sqrt|g|) Σ ∂_i (sqrt|g| g^{ij} ∂_j u) from first-order metric jets
/// and a second-order jet of u.
inline Scalar laplace_beltrami(const Jet2<Scalar, 1>& E, const Jet2<Scalar, 1>& F,
                               const Jet2<Scalar, 1>& G, const Jet2<Scalar, 2>& u) {
  const auto det = E * G - F * F;
  check_metric(E.value(), F.value(), G.value(), det.value());
  const auto w = sqrt_abs(det);
  const auto inv = recip(det);
  const auto us = u.d_s(), ut = u.d_t();
  const auto flux_s = w * inv * (G * us - F * ut);
  const auto flux_t = w * inv * (E * ut - F * us);
  return -(flux_s(1, 0) + flux_t(0, 1)) / w.value();
}

inline FundamentalForms fundamental_forms(const SurfacePatch& patch, double s, double t) {
  const auto fr = detail::frame(patch, s, t);
  FundamentalForms ff;
  ff.E = fr.E.value();
  ff.F = fr.F.value();
  ff.G = fr.G.value();
  ff.e = fr.e.value();
  ff.f = fr.f.value();
  ff.g = fr.g.value();
  ff.detg = ff.E * ff.G - ff.F * ff.F;
  check_metric(ff.E, ff.F, ff.G, ff.detg);
  ff.ginv = {{{ff.G / ff.detg, -ff.F / ff.detg}, {-ff.F / ff.detg, ff.E / ff.detg}}};
  return ff;
}

inline GaussMapSample gauss_map(const SurfacePatch& patch, double s, double t) {
  const auto fr = detail::frame(patch, s, t);
  GaussMapSample g;
  g.N = detail::values(fr.N);
  g.epsilon = fr.epsilon;
  g.target = fr.epsilon > 0 ? SpaceForm::DeSitter : SpaceForm::Hyperbolic;
  return g;
}

/// Laplace-Beltrami of a scalar field given as a function of jet coordinates.
template <class Field>
Scalar laplace_beltrami(const SurfacePatch& patch, Field&& field, double s, double t) {
  const auto fr = detail::frame(patch, s, t);
  const Jet4 u = field(Jet4::variable_s(s), Jet4::variable_t(t));
  return laplace_beltrami(fr.E.truncate<1>(), fr.F.truncate<1>(), fr.G.truncate<1>(),
                          u.truncate<2>());
}

namespace detail {

inline LVec3<Scalar> delta_gauss_map(const Frame& fr) {
  const auto E = fr.E.truncate<1>(), F = fr.F.truncate<1>(), G = fr.G.truncate<1>();
  return fr.N.map(
      [&](const Jet2<Scalar, 3>& c) { return laplace_beltrami(E, F, G, c.truncate<2>()); });
}

struct OneType {
  Scalar k;
  double residual = 0;
};

inline OneType pointwise_k(const LVec3<Scalar>& dN, const LVec3<Scalar>& N) {
  OneType r;
  r.k = lorentz_dot(dN, N) / lorentz_dot(N, N);
  for (int c = 0; c < 3; ++c) r.residual = std::max(r.residual, std::abs(dN[c] - r.k * N[c]));
  return r;
}

}  // namespace detail

/// Componentwise Laplace-Beltrami of the Gauss map.
inline LVec3<Scalar> delta_gauss_map(const SurfacePatch& patch, double s, double t) {
  return detail::delta_gauss_map(detail::frame(patch, s, t));
}

struct PointwiseK {
  Scalar k;
  double residual = 0;  ///< max_c |ΔN_c - k N_c|
};

/// k = <ΔN, N> / <N, N>; a vanishing residual certifies ΔN = kN at the point.
inline PointwiseK pointwise_k(const SurfacePatch& patch, double s, double t) {
  const auto fr = detail::frame(patch, s, t);
  const auto r = detail::pointwise_k(detail::delta_gauss_map(fr), detail::values(fr.N));
  return {r.k, r.residual};
}

inline Scalar mean_curvature(const FundamentalForms& ff) {
  check_metric(ff.E, ff.F, ff.G, ff.detg);
  return (ff.E * ff.g - 2.0 * ff.F * ff.f + ff.G * ff.e) / (2.0 * real_abs(ff.detg));
}

/// K = (eg - f²) / (EG - F²).
inline Scalar gaussian_curvature_ext(const FundamentalForms& ff) {
  check_metric(ff.E, ff.F, ff.G, ff.detg);
  return (ff.e * ff.g - ff.f * ff.f) / ff.detg;
}

namespace detail {

inline Scalar intrinsic_curvature(const Frame& fr) {
  const auto E = fr.E.truncate<2>(), F = fr.F.truncate<2>(), G = fr.G.truncate<2>();
  const Scalar det = E.value() * G.value() - F.value() * F.value();
  check_metric(E.value(), F.value(), G.value(), det);
  // The Brioschi quotient carries the opposite sign of (eg - f²)/(EG - F²) on
  // space-like charts and the same sign on time-like ones.
  const double sigma = -real_sign(det);
  return sigma * brioschi_difference(E, F, G) / (det * det);
}

inline Scalar second_gaussian_curvature(const Frame& fr, SecondFormDetConvention conv) {
  const Scalar e = fr.e.value(), f = fr.f.value(), g = fr.g.value();
  const Scalar base = conv == SecondFormDetConvention::AsPrinted
                          ? Scalar(real_abs(e * g)) - f * f
                          : e * g - f * f;
  if (std::abs(base) < 1e-12 * (1.0 + std::norm(e) + std::norm(f) + std::norm(g))) {
    throw DegenerateSecondForm("|eg| - f^2 = " + describe(base));
  }
  return brioschi_difference(fr.e, fr.f, fr.g) / (base * base);
}

}  // namespace detail

/// Intrinsic curvature from E, F, G and their derivatives alone (Brioschi).
/// Sign fixed so that it equals gaussian_curvature_ext on real charts.
inline Scalar gaussian_curvature_intrinsic(const SurfacePatch& patch, double s, double t) {
  return detail::intrinsic_curvature(detail::frame(patch, s, t));
}

/// Second Gaussian curvature: the Brioschi construction applied to (e, f, g),
/// divided by (|eg| - f²)².
inline Scalar second_gaussian_curvature(
    const SurfacePatch& patch, double s, double t,
    SecondFormDetConvention conv = SecondFormDetConvention::AsPrinted) {
  return detail::second_gaussian_curvature(detail::frame(patch, s, t), conv);
}

/// Every pointwise quantity at once, from a single jet evaluation.
struct GeometrySample {
  double s = 0, t = 0;
  LVec3<Scalar> x;
  FundamentalForms ff;
  GaussMapSample gauss;
  Scalar H, K_ext, K_int;
  std::optional<Scalar> K_II;  ///< empty where |eg| - f² vanishes
  LVec3<Scalar> dN;
  Scalar k;
  double residual = 0;
};

inline GeometrySample evaluate(const SurfacePatch& patch, double s, double t,
                               SecondFormDetConvention conv = SecondFormDetConvention::AsPrinted) {
  const auto fr = detail::frame(patch, s, t);
  GeometrySample out;
  out.s = s;
  out.t = t;
  out.x = detail::values(fr.x);
  auto& ff = out.ff;
  ff.E = fr.E.value();
  ff.F = fr.F.value();
  ff.G = fr.G.value();
  ff.e = fr.e.value();
  ff.f = fr.f.value();
  ff.g = fr.g.value();
  ff.detg = ff.E * ff.G - ff.F * ff.F;
  check_metric(ff.E, ff.F, ff.G, ff.detg);
  ff.ginv = {{{ff.G / ff.detg, -ff.F / ff.detg}, {-ff.F / ff.detg, ff.E / ff.detg}}};
  out.gauss.N = detail::values(fr.N);
  out.gauss.epsilon = fr.epsilon;
  out.gauss.target = fr.epsilon > 0 ? SpaceForm::DeSitter : SpaceForm::Hyperbolic;
  out.H = mean_curvature(ff);
  out.K_ext = gaussian_curvature_ext(ff);
  out.K_int = detail::intrinsic_curvature(fr);
  try {
    out.K_II = detail::second_gaussian_curvature(fr, conv);
  } catch (const DegenerateSecondForm&) {
    out.K_II.reset();
  }
  out.dN = detail::delta_gauss_map(fr);
  const auto r = detail::pointwise_k(out.dN, out.gauss.N);
  out.k = r.k;
  out.residual = r.residual;
  return out;
}

inline CurvatureSample curvatures(const SurfacePatch& patch, double s, double t,
                                  SecondFormDetConvention conv = SecondFormDetConvention::AsPrinted) {
  const auto g = evaluate(patch, s, t, conv);
  if (!g.K_II) detail::second_gaussian_curvature(detail::frame(patch, s, t), conv);
  return {g.H, g.K_ext, g.K_int, *g.K_II, s, t};
}

}  // namespace surfrev
