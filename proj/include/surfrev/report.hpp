#pragma once

// Output formats: JSON report, sample CSV and OBJ mesh. Numbers are written
// with std::to_chars at 17 significant digits, so output is locale-free and
// repeatable.

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfrev/claims.hpp"

namespace surfrev {

inline constexpr const char* kReportVersion = "1.0.0";

/// Shortest general form that keeps 17 significant digits.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) v = 0;  // drop the sign of -0
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

/// Real values as plain numbers, complex ones as re+imi.
inline std::string format_scalar(const Scalar& z) {
  if (z.imag() == 0) return format_number(z.real());
  const std::string im = format_number(z.imag());
  return format_number(z.real()) + (im.front() == '-' || im.front() == 'n' ? "" : "+") + im + "i";
}

namespace detail {

inline nlohmann::json number(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return v;
}

inline void dump_json(const nlohmann::json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(it.key()).dump() + ": ";
        dump_json(it.value(), out, indent, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_json(v, out, indent, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Key-sorted JSON text with 17-digit numbers.
inline std::string dump_json(const nlohmann::json& j) {
  std::string out;
  detail::dump_json(j, out, 2, 0);
  out += "\n";
  return out;
}

inline nlohmann::json params_json(const Params& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : p) j[k] = detail::number(v);
  return j;
}

inline nlohmann::json grid_json(const GridSpec& g) {
  return {{"ns", g.ns}, {"nt", g.nt}, {"shrink", detail::number(g.shrink)}};
}

inline nlohmann::json to_json(const ClaimResult& r) {
  nlohmann::json surfaces = nlohmann::json::array();
  for (const auto& s : r.surfaces) surfaces.push_back({{"id", s.id}, {"params", params_json(s.params)}});
  nlohmann::json metrics = nlohmann::json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = detail::number(v);
  return {{"claim_id", r.claim_id},
          {"surfaces", surfaces},
          {"grid", grid_json(r.grid)},
          {"tolerance", detail::number(r.tolerance)},
          {"max_residual", detail::number(r.max_residual)},
          {"engine_agreement", detail::number(r.engine_agreement)},
          {"verdict", to_string(r.verdict)},
          {"notes", r.notes},
          {"metrics", metrics}};
}

inline nlohmann::json report_json(const std::vector<ClaimResult>& rs, const VerifyOptions& o) {
  nlohmann::json claims = nlohmann::json::array();
  int pass = 0, fail = 0, flagged = 0;
  for (const auto& r : rs) {
    claims.push_back(to_json(r));
    pass += r.verdict == Verdict::Pass;
    fail += r.verdict == Verdict::Fail;
    flagged += r.verdict == Verdict::Flagged;
  }
  return {{"version", kReportVersion},
          {"claims", claims},
          {"environment",
           {{"tolerances",
             {{"tol", detail::number(o.tol)},
              {"strict_tol", detail::number(o.strict())},
              {"oracle_tol", detail::number(o.oracle_tol)}}},
            {"grid", grid_json(o.grid)},
            {"seed", o.seed},
            {"agreement_points", o.agreement_points},
            {"fd_step", detail::number(kDefaultFdStep)},
            {"second_form_det_convention",
             o.conv == SecondFormDetConvention::AsPrinted ? "as_printed" : "signed"},
            {"params", params_json(o.params)}}},
          {"summary", {{"PASS", pass}, {"FAIL", fail}, {"FLAGGED", flagged}, {"total", rs.size()}}}};
}

// --- CSV -------------------------------------------------------------------

inline constexpr const char* kCsvHeader =
    "s,t,E,F,G,e,f,g,H,K,KII,k,residual,N1_re,N1_im,N2_re,N2_im,N3_re,N3_im";

/// Samples 1-D: n points from lo, hi excluded when periodic.
inline std::vector<double> sample_axis(double lo, double hi, int n, bool periodic) {
  std::vector<double> v;
  if (n <= 0) return v;
  if (n == 1) return {lo};
  const int div = periodic ? n : n - 1;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / div);
  return v;
}

/// One CSV row per (s, t), t outer. Points where the geometry is undefined
/// keep their coordinates and carry nan elsewhere.
inline void write_sample_csv(std::ostream& os, const SurfacePatch& p, const std::vector<double>& ss,
                             const std::vector<double>& ts,
                             SecondFormDetConvention conv = SecondFormDetConvention::AsPrinted) {
  os << kCsvHeader << "\n";
  for (double t : ts) {
    for (double s : ss) {
      os << format_number(s) << "," << format_number(t);
      std::optional<GeometrySample> g;
      try {
        g = evaluate(p, s, t, conv);
      } catch (const Error&) {
      }
      if (!g) {
        for (int k = 0; k < 17; ++k) os << ",nan";
        os << "\n";
        continue;
      }
      for (const Scalar& z : {g->ff.E, g->ff.F, g->ff.G, g->ff.e, g->ff.f, g->ff.g, g->H, g->K_ext})
        os << "," << format_scalar(z);
      os << "," << (g->K_II ? format_scalar(*g->K_II) : std::string("nan"));
      os << "," << format_scalar(g->k) << "," << format_number(g->residual);
      for (int c = 0; c < 3; ++c)
        os << "," << format_number(g->gauss.N[c].real()) << "," << format_number(g->gauss.N[c].imag());
      os << "\n";
    }
  }
}

// --- OBJ -------------------------------------------------------------------

/// True when some chart component has a non-zero imaginary part on the grid.
inline bool chart_is_complex(const SurfacePatch& p, const std::vector<double>& ss,
                             const std::vector<double>& ts) {
  for (double t : ts)
    for (double s : ss) {
      const auto x = p.value(s, t);
      for (int c = 0; c < 3; ++c)
        if (std::abs(static_cast<double>(x[c].imag())) > 1e-12) return true;
    }
  return false;
}

/// Grid vertices (real parts) and quad faces, with a comment header.
inline void write_obj(std::ostream& os, const std::string& id, const Params& params,
                      const SurfacePatch& p, const std::vector<double>& ss,
                      const std::vector<double>& ts, bool real_part_note) {
  os << "# surfrev mesh\n# id " << id << "\n# params " << detail::fmt_params(params) << "\n";
  os << "# grid " << ss.size() << "x" << ts.size() << "\n";
  if (real_part_note) os << "# complex chart: vertices are component real parts\n";
  for (double t : ts)
    for (double s : ss) {
      const auto x = p.value(s, t);
      os << "v " << format_number(static_cast<double>(x.x1.real())) << " "
         << format_number(static_cast<double>(x.x2.real())) << " "
         << format_number(static_cast<double>(x.x3.real())) << "\n";
    }
  const std::size_t ns = ss.size();
  for (std::size_t j = 0; j + 1 < ts.size(); ++j)
    for (std::size_t i = 0; i + 1 < ns; ++i) {
      const std::size_t a = j * ns + i + 1;
      os << "f " << a << " " << a + 1 << " " << a + 1 + ns << " " << a + ns << "\n";
    }
}

}  // namespace surfrev
