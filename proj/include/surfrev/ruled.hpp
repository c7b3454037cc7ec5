#pragma once

// Ruled surfaces x(s, t) = α(s) + t β(s): causal-type classification and
// the "constant along each ruling" predicates for curvature combinations.

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surfrev/catalog.hpp"

namespace surfrev {

enum class RuledType { M1plus, M2plus, M3plus, M1minus, M2minus, NullScroll, Unclassified };

inline std::string to_string(RuledType r) {
  switch (r) {
    case RuledType::M1plus: return "M1plus";
    case RuledType::M2plus: return "M2plus";
    case RuledType::M3plus: return "M3plus";
    case RuledType::M1minus: return "M1minus";
    case RuledType::M2minus: return "M2minus";
    case RuledType::NullScroll: return "NullScroll";
    case RuledType::Unclassified: return "Unclassified";
  }
  return "?";
}

struct RuledSurface {
  using JetCurve = std::function<LVec3<Jet4>(const Jet4&)>;
  using ValueCurve = std::function<LVec3<ValueScalar>(const ValueScalar&)>;

  std::string label;
  Params params;
  JetCurve alpha, beta;
  ValueCurve alpha_value, beta_value;
  Rect domain;
  /// Catalog t of the ruled point (s, t) is t + t_offset.
  double t_offset = 0;

  LVec3<Scalar> alpha_prime(double s) const { return derivative(alpha, s); }
  LVec3<Scalar> beta_at(double s) const {
    return beta(Jet4::variable_s(s)).map([](const Jet4& c) { return c.value(); });
  }
  LVec3<Scalar> beta_prime(double s) const { return derivative(beta, s); }

  /// α(s) + t β(s) as a patch.
  SurfacePatch patch() const {
    SurfacePatch p;
    p.label = label + "/ruled";
    p.params = params;
    p.domain = domain;
    p.norm_mode = NormMode::Absolute;
    auto a = alpha, b = beta;
    p.jet_chart = [a, b](const Jet4& s, const Jet4& t) {
      const auto as = a(s), bs = b(s);
      return LVec3<Jet4>{as.x1 + t * bs.x1, as.x2 + t * bs.x2, as.x3 + t * bs.x3};
    };
    auto av = alpha_value, bv = beta_value;
    p.value_chart = [av, bv](const ValueScalar& s, const ValueScalar& t) {
      const auto as = av(s), bs = bv(s);
      return LVec3<ValueScalar>{as.x1 + t * bs.x1, as.x2 + t * bs.x2, as.x3 + t * bs.x3};
    };
    return p;
  }

 private:
  static LVec3<Scalar> derivative(const JetCurve& c, double s) {
    return c(Jet4::variable_s(s)).map([](const Jet4& v) { return v(1, 0); });
  }
};

/// Builds a ruled surface from curves written once for both scalar kinds.
/// The base curve is shifted to α + offset β, so the ruled t is catalog t - offset.
template <class Alpha, class Beta>
RuledSurface make_ruled(std::string label, Params params, Rect catalog_domain, double offset,
                        Alpha alpha, Beta beta) {
  RuledSurface r;
  r.label = std::move(label);
  r.params = std::move(params);
  r.domain = catalog_domain;
  r.domain.t_lo -= offset;
  r.domain.t_hi -= offset;
  r.domain.t_gap = 0;
  r.t_offset = offset;
  auto shifted = [alpha, beta, offset](const auto& s) {
    const auto a = alpha(s), b = beta(s);
    const auto c = lit(s, offset);
    return decltype(a){a.x1 + c * b.x1, a.x2 + c * b.x2, a.x3 + c * b.x3};
  };
  r.alpha = [shifted](const Jet4& s) { return shifted(s); };
  r.beta = [beta](const Jet4& s) { return beta(s); };
  r.alpha_value = [shifted](const ValueScalar& s) { return shifted(s); };
  r.beta_value = [beta](const ValueScalar& s) { return beta(s); };
  return r;
}

/// Ruled decomposition of a catalog helicoid or of the conjugate Enneper
/// surface. base_offset moves the base curve along the rulings.
inline RuledSurface ruled_from_catalog(const std::string& id, const Params& given = {},
                                       double base_offset = 0) {
  const auto& entry = find_entry(id);
  const Params p = resolve_params(entry, given);
  entry.validate(p);
  const Rect dom = entry.default_domain(p);

  if (id == "hel1") {
    const double a = p.at("a"), b = p.at("b");
    return make_ruled(
        id, p, dom, base_offset,
        [a, b](const auto& s) {
          using S = std::remove_cvref_t<decltype(s)>;
          return LVec3<S>{lit(s, a) * cos(s), lit(s, a) * sin(s), lit(s, -b) * s};
        },
        [](const auto& s) {
          using S = std::remove_cvref_t<decltype(s)>;
          return LVec3<S>{cos(s), sin(s), S(lit(s, 0.0))};
        });
  }
  if (id == "hel2s" || id == "hel2t") {
    const double a = p.at("a"), b = p.at("b");
    return make_ruled(
        id, p, dom, base_offset,
        [a, b](const auto& s) {
          using S = std::remove_cvref_t<decltype(s)>;
          return LVec3<S>{lit(s, a) * cosh(s), lit(s, -b) * s, lit(s, a) * sinh(s)};
        },
        [](const auto& s) {
          using S = std::remove_cvref_t<decltype(s)>;
          return LVec3<S>{cosh(s), S(lit(s, 0.0)), sinh(s)};
        });
  }
  if (id == "hel3") {
    const double a = p.at("a"), b = p.at("b");
    return make_ruled(
        id, p, dom, base_offset,
        [a, b](const auto& s) {
          using S = std::remove_cvref_t<decltype(s)>;
          return LVec3<S>{lit(s, b) * s, lit(s, a) * sinh(s), lit(s, a) * cosh(s)};
        },
        [](const auto& s) {
          using S = std::remove_cvref_t<decltype(s)>;
          return LVec3<S>{S(lit(s, 0.0)), sinh(s), cosh(s)};
        });
  }
  if (id == "enneper_conj2") {
    const double h = p.at("h");
    return make_ruled(
        id, p, dom, base_offset,
        [h](const auto& s) {
          using S = std::remove_cvref_t<decltype(s)>;
          const S s3 = s * s * s * lit(s, 1.0 / 3.0);
          return LVec3<S>{lit(s, h) * s * s, lit(s, h) * (s3 - s), lit(s, h) * (s3 + s)};
        },
        [](const auto& s) {
          using S = std::remove_cvref_t<decltype(s)>;
          return LVec3<S>{S(lit(s, 1.0)), s, s};
        });
  }
  throw NotRuled(id + " has no decomposition alpha(s) + t beta(s)");
}

struct RuledCharacters {
  CausalCharacter alpha_prime, beta, beta_prime;
};

inline RuledCharacters ruled_characters(const RuledSurface& r, double s, double tol) {
  return {causal_character(r.alpha_prime(s), tol), causal_character(r.beta_at(s), tol),
          causal_character(r.beta_prime(s), tol)};
}

inline RuledType ruled_type(const RuledCharacters& c) {
  using CC = CausalCharacter;
  if (c.alpha_prime == CC::LightLike && c.beta == CC::LightLike) return RuledType::NullScroll;
  if (c.alpha_prime == CC::SpaceLike) {
    if (c.beta == CC::SpaceLike)
      return c.beta_prime == CC::LightLike ? RuledType::M2plus : RuledType::M1plus;
    if (c.beta == CC::TimeLike && c.beta_prime == CC::SpaceLike) return RuledType::M3plus;
    return RuledType::Unclassified;
  }
  if (c.alpha_prime == CC::TimeLike && c.beta == CC::SpaceLike)
    return c.beta_prime == CC::LightLike ? RuledType::M2minus : RuledType::M1minus;
  return RuledType::Unclassified;
}

/// Type from the characters of α', β and β' at the samples. Characters that
/// change between samples raise InconsistentCharacter; constant combinations
/// outside the taxonomy give Unclassified.
inline RuledType classify_ruled(const RuledSurface& r, const std::vector<double>& s_samples,
                                double tol = 1e-10) {
  if (s_samples.empty()) return RuledType::Unclassified;
  const auto first = ruled_characters(r, s_samples.front(), tol);
  std::vector<std::string> bad;
  for (double s : s_samples) {
    const auto c = ruled_characters(r, s, tol);
    if (c.alpha_prime != first.alpha_prime || c.beta != first.beta ||
        c.beta_prime != first.beta_prime) {
      std::ostringstream os;
      os << "s=" << s << " (" << to_string(c.alpha_prime) << "," << to_string(c.beta) << ","
         << to_string(c.beta_prime) << ")";
      bad.push_back(os.str());
    }
  }
  if (!bad.empty()) {
    std::string msg = r.label + ": characters differ from s=" + std::to_string(s_samples.front()) +
                      " at";
    for (const auto& b : bad) msg += " " + b;
    throw InconsistentCharacter(msg);
  }
  return ruled_type(first);
}

struct CurvatureCombo {
  double c_KII = 0, c_H = 0, c_K = 0;
};

struct ConstancyResult {
  bool holds = false;
  double max_deviation = 0;
  double worst_s = 0;
  /// "aK_II+bH", "aH+bK", "aK_II+bK" or empty when no family admits the combo.
  std::string family;
  std::string family_note;
};

/// Which of the three admissible combination families the coefficients fit.
inline std::pair<std::string, std::string> combo_family(const CurvatureCombo& c) {
  if (c.c_K == 0 && c.c_KII != 0 && c.c_H != 0) {
    if (2 * c.c_KII - c.c_H != 0) return {"aK_II+bH", ""};
    return {"", "aK_II+bH needs 2a-b != 0"};
  }
  if (c.c_KII == 0 && c.c_H != 0) return {"aH+bK", ""};
  if (c.c_H == 0 && c.c_KII != 0) return {"aK_II+bK", ""};
  return {"", "coefficients fit none of aK_II+bH (a,b != 0, 2a-b != 0), aH+bK (a != 0), "
              "aK_II+bK (a != 0)"};
}

/// For each ruling (fixed s) the spread max - min of
/// c_KII K_II + c_H H + c_K K over t_samples; holds when every spread <= tol.
inline ConstancyResult constancy_along_rulings(
    const RuledSurface& r, const CurvatureCombo& combo, const std::vector<double>& t_samples,
    const std::vector<double>& s_samples, double tol = 1e-8,
    SecondFormDetConvention conv = SecondFormDetConvention::AsPrinted) {
  ConstancyResult out;
  std::tie(out.family, out.family_note) = combo_family(combo);
  const SurfacePatch p = r.patch();
  for (double s : s_samples) {
    std::vector<Scalar> vals;
    vals.reserve(t_samples.size());
    for (double t : t_samples) {
      const auto g = evaluate(p, s, t, conv);
      Scalar v = combo.c_H * g.H + combo.c_K * g.K_ext;
      if (combo.c_KII != 0) {
        if (!g.K_II) {
          throw DegenerateSecondForm(r.label + ": |eg| - f^2 vanishes at (" + std::to_string(s) +
                                     ", " + std::to_string(t) + ")");
        }
        v += combo.c_KII * *g.K_II;
      }
      vals.push_back(v);
    }
    double spread = 0;
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j)
        spread = std::max(spread, std::abs(vals[i] - vals[j]));
    if (spread > out.max_deviation || s == s_samples.front()) {
      out.max_deviation = spread;
      out.worst_s = s;
    }
  }
  out.holds = out.max_deviation <= tol;
  return out;
}

}  // namespace surfrev
