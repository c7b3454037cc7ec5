#pragma once

// Named surfaces: revolution surfaces of the three kinds, the matching
// helicoids, the Enneper pair and a torus used as a negative control.
//
// Charts are generic lambdas instantiated for Jet4 (derivatives) and for
// ValueScalar (finite-difference engine and mesh export). Every chart is
// written in u = t + a.

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surfrev/errors.hpp"
#include "surfrev/surface.hpp"

namespace surfrev {

/// Gauss map the entry declares at a base point; fixes the orientation.
struct ReferenceSign {
  double s = 0, t = 0;
  LVec3<Scalar> n;
  bool printed = true;  ///< false when the closed form was derived by hand instead
};

struct CatalogEntry {
  std::string id;
  std::string title;
  std::string constraint_text;
  Params default_params;
  NormMode norm_mode = NormMode::Absolute;
  bool revolution = false;  ///< member of the revolution family (torus included)
  std::string notes;

  std::function<void(const Params&)> validate;
  std::function<Rect(const Params&)> default_domain;
  std::function<SurfacePatch(const Params&, const Rect&)> make;
  std::function<std::optional<ReferenceSign>(const Params&)> reference;
  /// Closed-form k where one is known.
  std::function<std::optional<double>(const Params&, double s, double t)> closed_form_k;
};

namespace detail {

inline std::string fmt_num(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(6);
  os << v;
  return os.str();
}

inline std::string fmt_params(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ",";
    out += k + "=" + fmt_num(v);
  }
  return out;
}

inline std::optional<std::string> when(bool bad, std::string why) {
  return bad ? std::optional<std::string>(std::move(why)) : std::nullopt;
}

// Mode-aware unit vector on plain values, for reference formulas.
inline LVec3<Scalar> unit(const LVec3<Scalar>& w, NormMode mode) {
  return lorentz_normalize(w, mode).n;
}

inline Rect u_band(const Params& p, double u_lo, double u_hi, double s_lo, double s_hi,
                   bool periodic = false) {
  const double a = p.at("a");
  return {s_lo, s_hi, u_lo - a, u_hi - a, periodic, 0};
}

// Revolution domains in u = t + a, shared with the matching helicoid.
inline Rect domain_first_kind(const Params& p) {
  const double b = std::abs(p.at("b"));
  return u_band(p, b + 2.5, b + 5.0, 0, 2 * std::numbers::pi, true);
}

inline Rect domain_second_spacelike(const Params& p) {
  const double b = p.at("b");
  const double side = b > 0 ? -1.0 : 1.0;  // branch where b (t+a) < 0
  const double lo = 0.1 * std::abs(b), hi = 0.9 * std::abs(b);
  return side > 0 ? u_band(p, lo, hi, -1, 1) : u_band(p, -hi, -lo, -1, 1);
}

inline Rect domain_second_timelike(const Params& p) {
  const double b = std::abs(p.at("b"));
  return u_band(p, 1.6 * b, 1.6 * b + 2.5, -1, 1);
}

// One side of t+a = 0 only, so E = (t+a)^2 + b^2 is monotone in t.
inline Rect domain_third_kind(const Params& p) {
  const double b = std::abs(p.at("b"));
  return u_band(p, 0.1 * b, 0.9 * b, -1, 1);
}

inline Rect domain_enneper(const Params&) { return {-1, 1, -1.5, 1.5, false, 0.1}; }

inline Rect domain_torus(const Params&) {
  return {0, 2 * std::numbers::pi, -0.7, 0.7, true, 0};
}

inline double mid(double lo, double hi) { return 0.5 * (lo + hi); }

inline void require(bool ok, const std::string& text) {
  if (!ok) throw ConstraintViolation("\"" + text + "\" fails");
}

// --- revolution surfaces --------------------------------------------------

inline SurfacePatch rev1(const Params& p, const Rect& d) {
  const double a = p.at("a"), b = p.at("b");
  const double base = mid(d.t_lo, d.t_hi);
  auto chart = [a, b, base](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S u = t + lit(t, a);
    const S rho = sqrt_principal(u * u - lit(t, b * b));
    const S z = axial_integral(
        t,
        [a, b](const auto& v) {
          const auto w = v + lit(v, a);
          return sqrt_principal(lit(v, b * b) / (w * w - lit(v, b * b)));
        },
        base);
    return LVec3<S>{rho * cos(s), rho * sin(s), z};
  };
  return make_patch("rev1", p, d, NormMode::Absolute, chart, [a, b](double, double t) {
    const double u = t + a;
    return when(u * u <= b * b, "(t+a)^2 <= b^2");
  });
}

inline SurfacePatch rev2s(const Params& p, const Rect& d) {
  const double a = p.at("a"), b = p.at("b");
  auto chart = [a, b](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S u = t + lit(t, a);
    const S rho = sqrt_principal(lit(t, b * b) - u * u);
    return LVec3<S>{rho * sinh(s), lit(t, -b) * asin(rho / lit(t, -b)), rho * cosh(s)};
  };
  return make_patch("rev2s", p, d, NormMode::Absolute, chart, [a, b](double, double t) {
    const double u = t + a;
    if (u * u >= b * b) return when(true, "(t+a)^2 >= b^2");
    return when(u == 0, "t+a = 0 puts the arcsine argument at -b/|b|");
  });
}

inline SurfacePatch rev2t(const Params& p, const Rect& d) {
  const double a = p.at("a"), b = p.at("b");
  auto chart = [a, b](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S u = t + lit(t, a);
    const S rho = sqrt_principal(u * u - lit(t, b * b));
    return LVec3<S>{rho * cosh(s), lit(t, -b) * acosh(rho / lit(t, -b)), rho * sinh(s)};
  };
  return make_patch("rev2t", p, d, NormMode::Absolute, chart, [a, b](double, double t) {
    const double u = t + a;
    return when(u * u <= 2 * b * b, "(t+a)^2 <= 2b^2 leaves the arccosh domain");
  });
}

inline SurfacePatch rev3(const Params& p, const Rect& d) {
  const double a = p.at("a"), b = p.at("b");
  const bool real_variant = p.at("real_variant") != 0;
  const double sign = real_variant ? 1.0 : -1.0;
  const double base = mid(d.t_lo, d.t_hi);
  auto chart = [a, b, sign, base](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S u = t + lit(t, a);
    const S rho = sqrt_principal(lit(t, b * b) + u * u);
    const S z = axial_integral(
        t,
        [a, b, sign](const auto& v) {
          const auto w = v + lit(v, a);
          return sqrt_principal(lit(v, sign * b * b) / (lit(v, b * b) + w * w));
        },
        base);
    return LVec3<S>{z, rho * sinh(s), rho * cosh(s)};
  };
  return make_patch("rev3", p, d, real_variant ? NormMode::Absolute : NormMode::Bilinear, chart);
}

// --- helicoids ------------------------------------------------------------

inline SurfacePatch hel1(const Params& p, const Rect& d) {
  const double a = p.at("a"), b = p.at("b");
  auto chart = [a, b](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S u = t + lit(t, a);
    return LVec3<S>{u * cos(s), u * sin(s), lit(t, -b) * s};
  };
  return make_patch("hel1", p, d, NormMode::Absolute, chart, [a, b](double, double t) {
    const double u = t + a;
    return when(u * u <= b * b, "(t+a)^2 <= b^2");
  });
}

template <bool Spacelike>
SurfacePatch hel2(const Params& p, const Rect& d) {
  const double a = p.at("a"), b = p.at("b");
  auto chart = [a, b](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S u = t + lit(t, a);
    return LVec3<S>{u * cosh(s), lit(t, -b) * s, u * sinh(s)};
  };
  return make_patch(Spacelike ? "hel2s" : "hel2t", p, d, NormMode::Absolute, chart,
                    [a, b](double, double t) {
                      const double u = t + a;
                      return Spacelike ? when(u * u >= b * b, "(t+a)^2 >= b^2")
                                       : when(u * u <= b * b, "(t+a)^2 <= b^2");
                    });
}

inline SurfacePatch hel3(const Params& p, const Rect& d) {
  const double a = p.at("a"), b = p.at("b");
  auto chart = [a, b](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S u = t + lit(t, a);
    return LVec3<S>{lit(t, b) * s, u * sinh(s), u * cosh(s)};
  };
  return make_patch("hel3", p, d, NormMode::Absolute, chart, [a, b](double, double t) {
    const double u = t + a;
    return when(u * u >= b * b, "(t+a)^2 >= b^2");
  });
}

// --- Enneper pair and control ----------------------------------------------

inline SurfacePatch enneper_conj2(const Params& p, const Rect& d) {
  const double h = p.at("h");
  auto chart = [h](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S s3 = s * s * s * lit(t, 1.0 / 3.0);
    return LVec3<S>{lit(t, h) * s * s + t, lit(t, h) * (s3 - s) + t * s,
                    lit(t, h) * (s3 + s) + t * s};
  };
  return make_patch("enneper_conj2", p, d, NormMode::Absolute, chart,
                    [](double, double t) { return when(t == 0, "t = 0"); });
}

template <int Kind>
SurfacePatch enneper_rev(const Params& p, const Rect& d) {
  const double a = (Kind == 2 ? 1.0 : -1.0) * p.at("a"), b = p.at("b");
  auto chart = [a, b](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S at3 = lit(t, a) * t * t * t;
    const S st2 = s * s * t;
    return LVec3<S>{at3 + t - st2 + lit(t, b), lit(t, -2.0) * s * t, at3 - t - st2 + lit(t, b)};
  };
  return make_patch(Kind == 2 ? "enneper_rev2" : "enneper_rev3", p, d, NormMode::Absolute, chart,
                    [](double, double t) { return when(t == 0, "t = 0"); });
}

inline SurfacePatch torus(const Params& p, const Rect& d) {
  const double R = p.at("R"), r = p.at("r");
  auto chart = [R, r](const auto& s, const auto& t) {
    using S = std::remove_cvref_t<decltype(t)>;
    const S rho = lit(t, R) + lit(t, r) * cos(t);
    return LVec3<S>{rho * cos(s), rho * sin(s), lit(t, r) * sin(t)};
  };
  return make_patch("torus_control", p, d, NormMode::Absolute, chart, [](double, double t) {
    return when(std::cos(2 * t) <= 1e-12, "cos 2t <= 0 makes the normal light-like");
  });
}

inline std::optional<double> k_first(const Params& p, double, double t) {
  const double a = p.at("a"), b = p.at("b"), u = t + a;
  return -2 * b * b / std::pow(u * u - b * b, 2);
}

inline std::optional<double> k_second_spacelike(const Params& p, double, double t) {
  const double a = p.at("a"), b = p.at("b"), u = t + a;
  return -2 * b * b / std::pow(b * b - u * u, 2);
}

inline std::optional<double> k_third(const Params& p, double, double t) {
  if (p.at("real_variant") != 0) return std::nullopt;
  const double a = p.at("a"), b = p.at("b"), u = t + a;
  return -2 * b * b / std::pow(u * u + b * b, 2);
}

inline std::optional<double> no_k(const Params&, double, double) { return std::nullopt; }

inline ReferenceSign base_reference(const Rect& d, bool printed = true) {
  ReferenceSign r;
  r.s = d.s_periodic ? d.s_lo : mid(d.s_lo, d.s_hi);
  r.t = mid(d.t_lo, d.t_hi);
  if (std::abs(r.t) < d.t_gap) r.t = d.t_hi - 0.25 * (d.t_hi - d.t_lo);
  r.printed = printed;
  return r;
}

inline std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> v;
  const auto none = [](const Params&) {};

  {
    CatalogEntry e;
    e.id = "rev1";
    e.title = "surface of revolution of the 1st kind, space-like";
    e.constraint_text = "b^2<(t+a)^2 on the domain";
    e.default_params = {{"a", 3}, {"b", 1}};
    e.revolution = true;
    e.notes = "third component is the axial integral of sqrt(b^2/((t+a)^2-b^2)) from the domain center";
    e.validate = none;
    e.default_domain = domain_first_kind;
    e.make = rev1;
    e.reference = [](const Params& p) {
      auto r = base_reference(domain_first_kind(p));
      const double a = p.at("a"), b = p.at("b"), u = r.t + a, rho = std::sqrt(u * u - b * b);
      r.n = LVec3<Scalar>{b * std::cos(r.s), b * std::sin(r.s), u} * (-1.0 / rho);
      return std::optional(r);
    };
    e.closed_form_k = k_first;
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "rev2s";
    e.title = "surface of revolution of the 2nd kind, space-like";
    e.constraint_text = "(t+a)^2<b^2, b!=0";
    e.default_params = {{"a", 0}, {"b", 2}};
    e.revolution = true;
    e.notes = "default domain lies on the branch b(t+a) < 0, where the closed-form Gauss map is normal";
    e.validate = [](const Params& p) {
      if (p.at("b") == 0) throw InfeasibleDomain("b = 0 leaves no t with (t+a)^2 < b^2");
    };
    e.default_domain = domain_second_spacelike;
    e.make = rev2s;
    e.reference = [](const Params& p) {
      auto r = base_reference(domain_second_spacelike(p));
      const double a = p.at("a"), b = p.at("b"), u = r.t + a, rho = std::sqrt(b * b - u * u);
      r.n = LVec3<Scalar>{-b * std::sinh(r.s), u, -b * std::cosh(r.s)} * (1.0 / rho);
      return std::optional(r);
    };
    e.closed_form_k = k_second_spacelike;
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "rev2t";
    e.title = "surface of revolution of the 2nd kind, time-like";
    e.constraint_text = "b<0, (t+a)^2>=2b^2";
    e.default_params = {{"a", 3}, {"b", -1}};
    e.revolution = true;
    e.notes =
        "arccosh argument sqrt((t+a)^2-b^2)/(-b) needs b<0 and (t+a)^2>=2b^2; "
        "reference normal derived from the chart since the closed form (-b sinh s, t+a, -b cosh s) "
        "is not orthogonal to x_s";
    e.validate = [](const Params& p) {
      if (p.at("b") >= 0)
        throw InfeasibleDomain("arccosh argument sqrt((t+a)^2-b^2)/(-b) is not >= 1 unless b < 0");
    };
    e.default_domain = domain_second_timelike;
    e.make = rev2t;
    e.reference = [](const Params& p) {
      auto r = base_reference(domain_second_timelike(p), false);
      const double a = p.at("a"), b = p.at("b"), u = r.t + a;
      const double rho = std::sqrt(u * u - b * b);
      const double drho = u / rho, dy = drho * std::abs(b) / std::sqrt(u * u - 2 * b * b);
      r.n = unit({-dy * std::cosh(r.s), drho, -dy * std::sinh(r.s)}, NormMode::Absolute);
      return std::optional(r);
    };
    e.closed_form_k = k_first;
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "rev3";
    e.title = "surface of revolution of the 3rd kind, Lorentzian";
    e.constraint_text = "none (real_variant in {0,1})";
    e.default_params = {{"a", 0}, {"b", 1}, {"real_variant", 0}};
    e.norm_mode = NormMode::Bilinear;
    e.revolution = true;
    e.notes =
        "complexified: first component integrates sqrt(-b^2/(b^2+(t+a)^2)); real_variant=1 uses "
        "+b^2 and absolute normalization";
    e.validate = [](const Params& p) {
      const double rv = p.at("real_variant");
      if (rv != 0 && rv != 1) throw ConstraintViolation("\"real_variant in {0,1}\" fails");
    };
    e.default_domain = domain_third_kind;
    e.make = rev3;
    e.reference = [](const Params& p) -> std::optional<ReferenceSign> {
      if (p.at("real_variant") != 0) return std::nullopt;
      auto r = base_reference(domain_third_kind(p));
      const double a = p.at("a"), b = p.at("b"), u = r.t + a;
      const Scalar i(0, 1);
      r.n = LVec3<Scalar>{u, i * b * std::sinh(r.s), i * b * std::cosh(r.s)} *
            (-1.0 / std::sqrt(u * u + b * b));
      return r;
    };
    e.closed_form_k = k_third;
    v.push_back(e);
  }

  auto helicoid = [&](std::string id, std::string title, std::string constraint, Params defaults,
                      std::function<bool(double, double)> ok, std::function<Rect(const Params&)> dom,
                      std::function<SurfacePatch(const Params&, const Rect&)> make,
                      std::function<LVec3<Scalar>(double a, double b, double s, double u)> normal) {
    CatalogEntry e;
    e.id = std::move(id);
    e.title = std::move(title);
    e.constraint_text = constraint;
    e.default_params = std::move(defaults);
    e.validate = [constraint, ok](const Params& p) { require(ok(p.at("a"), p.at("b")), constraint); };
    e.default_domain = dom;
    e.make = std::move(make);
    e.reference = [dom, normal](const Params& p) {
      auto r = base_reference(dom(p), false);
      const double a = p.at("a"), b = p.at("b");
      r.n = unit(normal(a, b, r.s, r.t + a), NormMode::Absolute);
      return std::optional(r);
    };
    e.closed_form_k = no_k;
    v.push_back(e);
  };

  helicoid(
      "hel1", "helicoid of the 1st kind, space-like", "|a|>|b|>0", {{"a", 3}, {"b", 1}},
      [](double a, double b) { return std::abs(a) > std::abs(b) && std::abs(b) > 0; },
      domain_first_kind, hel1, [](double, double b, double s, double u) {
        return LVec3<Scalar>{b * std::sin(s), -b * std::cos(s), u};
      });
  auto hel2_normal = [](double, double b, double s, double u) {
    return LVec3<Scalar>{-b * std::sinh(s), u, -b * std::cosh(s)};
  };
  helicoid(
      "hel2s", "helicoid of the 2nd kind, space-like", "|b|>|a|", {{"a", 0}, {"b", 2}},
      [](double a, double b) { return std::abs(b) > std::abs(a); }, domain_second_spacelike,
      hel2<true>, hel2_normal);
  helicoid(
      "hel2t", "helicoid of the 2nd kind, time-like", "|a|>|b|>0", {{"a", 3}, {"b", -1}},
      [](double a, double b) { return std::abs(a) > std::abs(b) && std::abs(b) > 0; },
      domain_second_timelike, hel2<false>, hel2_normal);
  helicoid(
      "hel3", "helicoid of the 3rd kind, Lorentzian", "|a|<|b|", {{"a", 0}, {"b", 1}},
      [](double a, double b) { return std::abs(a) < std::abs(b); }, domain_third_kind, hel3,
      [](double, double b, double s, double u) {
        return LVec3<Scalar>{u, -b * std::cosh(s), -b * std::sinh(s)};
      });

  {
    CatalogEntry e;
    e.id = "enneper_conj2";
    e.title = "conjugate of Enneper's surface of the 2nd kind";
    e.constraint_text = "h!=0";
    e.default_params = {{"h", 1}};
    e.notes = "EG-F^2 = -4ht: space-like for ht<0, time-like for ht>0; t=0 excluded";
    e.validate = [](const Params& p) { require(p.at("h") != 0, "h!=0"); };
    e.default_domain = domain_enneper;
    e.make = enneper_conj2;
    e.reference = [](const Params& p) {
      auto r = base_reference(domain_enneper(p), false);
      const double h = p.at("h"), s = r.s, t = r.t;
      r.n = unit({-2 * h * s, h * (1 - s * s) + t, t - h * (1 + s * s)}, NormMode::Absolute);
      return std::optional(r);
    };
    e.closed_form_k = no_k;
    v.push_back(e);
  }
  for (int kind : {2, 3}) {
    CatalogEntry e;
    e.id = kind == 2 ? "enneper_rev2" : "enneper_rev3";
    e.title = kind == 2 ? "Enneper surface of revolution of the 2nd kind"
                        : "Enneper surface of revolution of the 3rd kind";
    e.constraint_text = "a>0";
    e.default_params = {{"a", 1}, {"b", 0}};
    e.revolution = true;
    e.notes = "t=0 excluded";
    e.validate = [](const Params& p) { require(p.at("a") > 0, "a>0"); };
    e.default_domain = domain_enneper;
    e.make = kind == 2 ? enneper_rev<2> : enneper_rev<3>;
    e.reference = [kind](const Params& p) {
      auto r = base_reference(domain_enneper(p), false);
      const double a = (kind == 2 ? 1 : -1) * p.at("a"), s = r.s, t = r.t;
      const double A = 3 * a * t * t + s * s;
      r.n = unit({-(A - 1), -2 * s, -(A + 1)}, NormMode::Absolute);
      if (t < 0) r.n = -r.n;  // the common factor t was dropped
      return std::optional(r);
    };
    e.closed_form_k = no_k;
    v.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "torus_control";
    e.title = "torus of revolution (negative control)";
    e.constraint_text = "R>r>0";
    e.default_params = {{"R", 2}, {"r", 0.5}};
    e.revolution = true;
    e.notes = "time-like where cos 2t > 0; default domain keeps |t| < pi/4";
    e.validate = [](const Params& p) {
      require(p.at("R") > p.at("r") && p.at("r") > 0, "R>r>0");
    };
    e.default_domain = domain_torus;
    e.make = torus;
    e.reference = [](const Params& p) {
      auto r = base_reference(domain_torus(p), false);
      const double s = r.s, t = r.t;
      r.n = unit({std::cos(s) * std::cos(t), std::sin(s) * std::cos(t), -std::sin(t)},
                 NormMode::Absolute);
      return std::optional(r);
    };
    e.closed_form_k = no_k;
    v.push_back(e);
  }
  return v;
}

}  // namespace detail

/// All entries in their fixed listing order.
inline const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> entries = detail::build_entries();
  return entries;
}

inline const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : list_entries())
    if (e.id == id) return e;
  throw UnknownEntry("no catalog entry '" + id + "'");
}

/// Defaults overlaid with the given values. Unknown names are rejected.
inline Params resolve_params(const CatalogEntry& e, const Params& given) {
  Params p = e.default_params;
  for (const auto& [k, v] : given) {
    if (!p.count(k)) throw ConstraintViolation("unknown parameter '" + k + "' for " + e.id);
    p[k] = v;
  }
  return p;
}

/// Picks ±1 so that the Gauss map at the reference point matches the
/// declared components. Returns +1 when the entry declares none.
inline int reference_orientation(const SurfacePatch& raw, const std::optional<ReferenceSign>& ref) {
  if (!ref) return 1;
  const auto n = gauss_map(raw, ref->s, ref->t).N;
  double plus = 0, minus = 0;
  for (int c = 0; c < 3; ++c) {
    plus += std::norm(n[c] - ref->n[c]);
    minus += std::norm(n[c] + ref->n[c]);
  }
  return minus < plus ? -1 : 1;
}

/// Builds a patch on an explicit domain.
inline SurfacePatch build(const std::string& id, const Params& params, const Rect& domain) {
  const auto& e = find_entry(id);
  const Params p = resolve_params(e, params);
  e.validate(p);
  SurfacePatch patch = e.make(p, domain);
  patch.orientation = 1;
  patch.orientation = reference_orientation(patch, e.reference(p));
  return patch;
}

/// Builds a patch on the entry's default domain.
inline SurfacePatch build(const std::string& id, const Params& params = {}) {
  const auto& e = find_entry(id);
  const Params p = resolve_params(e, params);
  e.validate(p);
  return build(id, p, e.default_domain(p));
}

}  // namespace surfrev
