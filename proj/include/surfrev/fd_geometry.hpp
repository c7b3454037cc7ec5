#pragma once

// Independent evaluation of the same geometric quantities as surface.hpp,
// from finite differences of the chart values in extended precision. No jet
// arithmetic is involved: derivatives of N, of the metric and of (e, f, g)
// are nested central differences, and the Laplacian is assembled from the
// expanded product rule rather than from flux jets.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfrev/fd_oracle.hpp"
#include "surfrev/surface.hpp"

namespace surfrev {

struct OracleSample {
  double s = 0, t = 0;
  Scalar E, F, G, e, f, g;
  Scalar H, K_ext, K_int;
  std::optional<Scalar> K_II;
  LVec3<Scalar> N;
  LVec3<Scalar> dN;
  Scalar k;
};

namespace detail {

using C = ValueScalar;
using R = long double;
using Triple = std::array<C, 3>;

inline Scalar narrow(const C& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline C dot3(const LVec3<C>& a, const LVec3<C>& b) { return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3; }

inline C det3_rowwise(const std::array<std::array<C, 3>, 3>& m) {
  // cofactor expansion along the second row
  return -m[1][0] * (m[0][1] * m[2][2] - m[0][2] * m[2][1]) +
         m[1][1] * (m[0][0] * m[2][2] - m[0][2] * m[2][0]) -
         m[1][2] * (m[0][0] * m[2][1] - m[0][1] * m[2][0]);
}

struct FormDerivatives {
  Triple v, ds, dt, dss, dst, dtt;
};

// (16 D(h/2) - D(h)) / 15 on estimates that are already O(h^4).
inline FormDerivatives extrapolate(const FormDerivatives& coarse, const FormDerivatives& fine) {
  FormDerivatives out = fine;
  auto mix = [](Triple& o, const Triple& c) {
    for (int k = 0; k < 3; ++k) o[k] = (C(16) * o[k] - c[k]) / C(15);
  };
  mix(out.ds, coarse.ds);
  mix(out.dt, coarse.dt);
  mix(out.dss, coarse.dss);
  mix(out.dst, coarse.dst);
  mix(out.dtt, coarse.dtt);
  return out;
}

inline C brioschi_fd(const FormDerivatives& d) {
  const C P = d.v[0], Q = d.v[1], Rr = d.v[2];
  const C half(0.5L);
  const std::array<std::array<C, 3>, 3> a{{
      {-half * d.dtt[0] + d.dst[1] - half * d.dss[2], half * d.ds[0], d.ds[1] - half * d.dt[0]},
      {d.dt[1] - half * d.ds[2], P, Q},
      {half * d.dt[2], Q, Rr},
  }};
  const std::array<std::array<C, 3>, 3> b{{
      {C(0), half * d.dt[0], half * d.ds[2]},
      {half * d.dt[0], P, Q},
      {half * d.ds[2], Q, Rr},
  }};
  return det3_rowwise(a) - det3_rowwise(b);
}

class FdEngine {
 public:
  FdEngine(const SurfacePatch& patch, R h) : patch_(patch), h_(h) {}

  LVec3<C> chart(R s, R t) const { return patch_.value(s, t); }

  std::pair<LVec3<C>, LVec3<C>> tangents(R s, R t) const {
    auto x = [this](R a, R b) { return chart(a, b); };
    return {fd_partial(x, s, t, 1, 0, h_), fd_partial(x, s, t, 0, 1, h_)};
  }

  LVec3<C> normal(R s, R t, int* eps_out = nullptr) const {
    const auto [xs, xt] = tangents(s, t);
    const LVec3<C> w = {xs.x2 * xt.x3 - xs.x3 * xt.x2, xs.x3 * xt.x1 - xs.x1 * xt.x3,
                        xs.x2 * xt.x1 - xs.x1 * xt.x2};
    const C q = dot3(w, w);
    C len;
    int eps = 1;
    if (patch_.norm_mode == NormMode::Absolute) {
      eps = q.real() < 0 ? -1 : 1;
      len = C(std::sqrt(std::abs(q.real())));
    } else {
      len = std::sqrt(q);
    }
    if (eps_out) *eps_out = eps;
    const C scale = C(static_cast<R>(patch_.orientation)) / len;
    return {w.x1 * scale, w.x2 * scale, w.x3 * scale};
  }

  Triple metric(R s, R t) const {
    const auto [xs, xt] = tangents(s, t);
    return {dot3(xs, xs), dot3(xs, xt), dot3(xt, xt)};
  }

  Triple second_form(R s, R t) const {
    auto x = [this](R a, R b) { return chart(a, b); };
    const auto n = normal(s, t);
    return {dot3(fd_partial(x, s, t, 2, 0, h_), n), dot3(fd_partial(x, s, t, 1, 1, h_), n),
            dot3(fd_partial(x, s, t, 0, 2, h_), n)};
  }

  template <class Field>
  FormDerivatives derivatives(Field&& field, R s, R t, R h) const {
    FormDerivatives d;
    d.v = field(s, t);
    d.ds = fd_partial(field, s, t, 1, 0, h);
    d.dt = fd_partial(field, s, t, 0, 1, h);
    d.dss = fd_partial(field, s, t, 2, 0, h);
    d.dst = fd_partial(field, s, t, 1, 1, h);
    d.dtt = fd_partial(field, s, t, 0, 2, h);
    return d;
  }

  R step() const { return h_; }

 private:
  const SurfacePatch& patch_;
  R h_;
};

}  // namespace detail

/// Steps for K_II, whose (e, f, g) derivatives nest one second difference
/// inside another: the inner one (for e, f, g themselves) and the outer one.
/// With the default step these are dominated by rounding, so both are wider
/// and the outer derivatives get a second Richardson level.
inline constexpr double kSecondFormInnerStep = 5e-3;
inline constexpr double kSecondFormOuterStep = 2e-2;

/// Finite-difference counterpart of evaluate(). h is the step of every
/// stencil level outside K_II.
inline OracleSample fd_evaluate(const SurfacePatch& patch, double s_, double t_,
                                double h = kDefaultFdStep,
                                SecondFormDetConvention conv = SecondFormDetConvention::AsPrinted) {
  using detail::C;
  using detail::R;
  patch.require_admissible(s_, t_);
  const detail::FdEngine eng(patch, static_cast<R>(h));
  const R s = s_, t = t_;
  OracleSample out;
  out.s = s_;
  out.t = t_;

  auto metric = [&](R a, R b) { return eng.metric(a, b); };
  const detail::FdEngine wide(patch, static_cast<R>(kSecondFormInnerStep));
  auto second = [&](R a, R b) { return wide.second_form(a, b); };
  auto normal = [&](R a, R b) { return eng.normal(a, b); };

  const auto M = eng.derivatives(metric, s, t, eng.step());
  const C E = M.v[0], F = M.v[1], G = M.v[2];
  const C D = E * G - F * F;
  check_metric(detail::narrow(E), detail::narrow(F), detail::narrow(G), detail::narrow(D));
  const auto S2 = eng.second_form(s, t);
  const C e = S2[0], f = S2[1], g = S2[2];

  int eps = 1;
  const auto N = eng.normal(s, t, &eps);
  const R sigma = D.real() < 0 ? -1 : 1;
  const C absD = C(std::abs(D.real()));

  out.E = detail::narrow(E);
  out.F = detail::narrow(F);
  out.G = detail::narrow(G);
  out.e = detail::narrow(e);
  out.f = detail::narrow(f);
  out.g = detail::narrow(g);
  out.H = detail::narrow((E * g - C(2) * F * f + G * e) / (C(2) * absD));
  out.K_ext = detail::narrow((e * g - f * f) / D);
  out.K_int = detail::narrow(C(-sigma) * detail::brioschi_fd(M) / (D * D));
  out.N = N.map([](const C& z) { return detail::narrow(z); });

  {
    const C base = conv == SecondFormDetConvention::AsPrinted
                       ? C(std::abs((e * g).real())) - f * f
                       : e * g - f * f;
    const long double scale = 1 + std::norm(e) + std::norm(f) + std::norm(g);
    if (std::abs(base) >= 1e-12L * scale) {
      const R ho = kSecondFormOuterStep;
      const auto S = detail::extrapolate(eng.derivatives(second, s, t, ho),
                                         eng.derivatives(second, s, t, ho / 2));
      out.K_II = detail::narrow(detail::brioschi_fd(S) / (base * base));
    }
  }

  // Laplacian via the expanded product rule.
  const C Ds = M.ds[0] * G + E * M.ds[2] - C(2) * F * M.ds[1];
  const C Dt = M.dt[0] * G + E * M.dt[2] - C(2) * F * M.dt[1];
  const C w = std::sqrt(C(sigma) * D);
  const C ws = C(sigma) * Ds / (C(2) * w), wt = C(sigma) * Dt / (C(2) * w);
  const C g11 = G / D, g12 = -F / D, g22 = E / D;
  const C g11s = (M.ds[2] * D - G * Ds) / (D * D);
  const C g12s = -(M.ds[1] * D - F * Ds) / (D * D);
  const C g12t = -(M.dt[1] * D - F * Dt) / (D * D);
  const C g22t = (M.dt[0] * D - E * Dt) / (D * D);

  const R hh = eng.step();
  const auto Ns = fd_partial(normal, s, t, 1, 0, hh);
  const auto Nt = fd_partial(normal, s, t, 0, 1, hh);
  const auto Nss = fd_partial(normal, s, t, 2, 0, hh);
  const auto Nst = fd_partial(normal, s, t, 1, 1, hh);
  const auto Ntt = fd_partial(normal, s, t, 0, 2, hh);
  LVec3<C> dN;
  for (int c = 0; c < 3; ++c) {
    const C us = Ns[c], ut = Nt[c];
    const C div_s = ws * (g11 * us + g12 * ut) + w * (g11s * us + g11 * Nss[c] + g12s * ut + g12 * Nst[c]);
    const C div_t = wt * (g12 * us + g22 * ut) + w * (g12t * us + g12 * Nst[c] + g22t * ut + g22 * Ntt[c]);
    dN[c] = -(div_s + div_t) / w;
  }
  out.dN = dN.map([](const C& z) { return detail::narrow(z); });
  out.k = detail::narrow(detail::dot3(dN, N) / detail::dot3(N, N));
  return out;
}

/// |a - b| / max(1, |a|): absolute agreement below magnitude 1, relative above.
inline double agreement(const Scalar& a, const Scalar& b) {
  return std::abs(a - b) / std::max(1.0, std::abs(a));
}

/// Per-quantity agreement between the jet engine and the oracle at one point.
inline std::vector<std::pair<std::string, double>> engine_differences(const GeometrySample& jet,
                                                                      const OracleSample& fd) {
  std::vector<std::pair<std::string, double>> d = {
      {"E", agreement(jet.ff.E, fd.E)},   {"F", agreement(jet.ff.F, fd.F)},
      {"G", agreement(jet.ff.G, fd.G)},   {"e", agreement(jet.ff.e, fd.e)},
      {"f", agreement(jet.ff.f, fd.f)},   {"g", agreement(jet.ff.g, fd.g)},
      {"H", agreement(jet.H, fd.H)},      {"K", agreement(jet.K_ext, fd.K_ext)},
      {"K_int", agreement(jet.K_int, fd.K_int)},
      {"dN1", agreement(jet.dN.x1, fd.dN.x1)}, {"dN2", agreement(jet.dN.x2, fd.dN.x2)},
      {"dN3", agreement(jet.dN.x3, fd.dN.x3)},
      {"N1", agreement(jet.gauss.N.x1, fd.N.x1)}, {"N2", agreement(jet.gauss.N.x2, fd.N.x2)},
      {"N3", agreement(jet.gauss.N.x3, fd.N.x3)}, {"k", agreement(jet.k, fd.k)},
  };
  if (jet.K_II && fd.K_II) d.emplace_back("K_II", agreement(*jet.K_II, *fd.K_II));
  return d;
}

/// Uniform draws in [0, 1) from the top 53 bits of mt19937_64, so point sets
/// do not depend on the standard library's distribution implementation.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// n seeded interior points of the shrunk domain, skipping the t gap and
/// excluded points.
inline std::vector<std::pair<double, double>> seeded_points(const SurfacePatch& patch, int n,
                                                            std::uint64_t seed,
                                                            double shrink = 0.02) {
  const Rect& d = patch.domain;
  const double ds = (d.s_hi - d.s_lo) * shrink, dt = (d.t_hi - d.t_lo) * shrink;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<double, double>> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < n && guard++ < 1000 * (n + 1)) {
    const double s = d.s_lo + ds + (d.s_hi - d.s_lo - 2 * ds) * unit_draw(rng);
    const double t = d.t_lo + dt + (d.t_hi - d.t_lo - 2 * dt) * unit_draw(rng);
    if (std::abs(t) < d.t_gap || patch.excluded(s, t)) continue;
    out.emplace_back(s, t);
  }
  return out;
}

struct OracleReport {
  int points = 0;
  double max_difference = 0;
  std::string worst_quantity;
  double worst_s = 0, worst_t = 0;
  std::map<std::string, double> per_quantity;
};

/// Jet engine against the finite-difference engine at seeded points.
inline OracleReport oracle_sweep(const SurfacePatch& patch, int n, std::uint64_t seed,
                                 SecondFormDetConvention conv = SecondFormDetConvention::AsPrinted) {
  OracleReport rep;
  for (const auto& [s, t] : seeded_points(patch, n, seed)) {
    const auto jet = evaluate(patch, s, t, conv);
    const auto fd = fd_evaluate(patch, s, t, kDefaultFdStep, conv);
    ++rep.points;
    for (const auto& [name, diff] : engine_differences(jet, fd)) {
      auto& slot = rep.per_quantity[name];
      slot = std::max(slot, diff);
      if (diff > rep.max_difference || rep.worst_quantity.empty()) {
        rep.max_difference = std::max(rep.max_difference, diff);
        rep.worst_quantity = name;
        rep.worst_s = s;
        rep.worst_t = t;
      }
    }
  }
  return rep;
}

}  // namespace surfrev
