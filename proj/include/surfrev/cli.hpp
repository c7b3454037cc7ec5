#pragma once

// Command-line front end. run() takes the argument list (without the program
// name) and returns the process exit code: 0 all PASS, 1 any FAIL, 2 FLAGGED
// only, 3 usage or constraint error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surfrev/claims.hpp"
#include "surfrev/fd_geometry.hpp"
#include "surfrev/report.hpp"

namespace surfrev::cli {

inline constexpr int kUsageError = 3;

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

namespace detail {

inline double parse_double(const std::string& text, const std::string& what) {
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  double v = 0;
  if (!(is >> v) || !(is >> std::ws).eof()) throw UsageError("bad number '" + text + "' in " + what);
  return v;
}

inline int parse_int(const std::string& text, const std::string& what) {
  const double v = parse_double(text, what);
  if (v != static_cast<int>(v)) throw UsageError("expected an integer in " + what + ", got '" + text + "'");
  return static_cast<int>(v);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

/// "a=3,b=1" into a parameter map.
inline Params parse_params(const std::string& text) {
  Params p;
  if (text.empty()) return p;
  for (const auto& kv : split(text, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("bad --params item '" + kv + "', expected name=value");
    p[kv.substr(0, eq)] = parse_double(kv.substr(eq + 1), "--params");
  }
  return p;
}

struct Range {
  double lo = 0, hi = 0;
  int n = 0;
};

/// lo:hi:n
inline Range parse_range(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError(flag + " expects lo:hi:n, got '" + text + "'");
  Range r{parse_double(parts[0], flag), parse_double(parts[1], flag), parse_int(parts[2], flag)};
  if (r.n < 1) throw UsageError(flag + " needs n >= 1");
  return r;
}

/// NxM
inline GridSpec parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw UsageError("--grid expects NxM, got '" + text + "'");
  GridSpec g;
  g.ns = parse_int(text.substr(0, x), "--grid");
  g.nt = parse_int(text.substr(x + 1), "--grid");
  if (g.ns < 2 || g.nt < 2) throw UsageError("--grid needs N, M >= 2");
  return g;
}

inline double default_tolerance() {
  if (const char* env = std::getenv("SURFREV_DEFAULT_TOL"); env && *env)
    return parse_double(env, "SURFREV_DEFAULT_TOL");
  return 1e-8;
}

struct Axes {
  std::vector<double> s, t;
};

inline Axes axes_for(const SurfacePatch& p, const std::string& s_text, const std::string& t_text) {
  const Rect& d = p.domain;
  const Range rs = s_text.empty() ? Range{d.s_lo, d.s_hi, 64} : parse_range(s_text, "--s");
  const Range rt = t_text.empty() ? Range{d.t_lo, d.t_hi, 64} : parse_range(t_text, "--t");
  return {sample_axis(rs.lo, rs.hi, rs.n, d.s_periodic), sample_axis(rt.lo, rt.hi, rt.n, false)};
}

inline std::string domain_text(const Rect& d) {
  std::ostringstream os;
  os << "s in [" << format_number(d.s_lo) << ", " << format_number(d.s_hi) << (d.s_periodic ? ") periodic" : "]")
     << ", t in [" << format_number(d.t_lo) << ", " << format_number(d.t_hi) << "]";
  if (d.t_gap > 0) os << " with |t| >= " << format_number(d.t_gap);
  return os.str();
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
}

inline int list(std::ostream& out) {
  for (const auto& e : list_entries())
    out << e.id << "\t" << e.title << "\tparams: " << surfrev::detail::fmt_params(e.default_params)
        << "\trequires: " << e.constraint_text << "\n";
  return 0;
}

inline int describe(const std::string& id, const std::string& params_text, std::ostream& out) {
  const auto& e = find_entry(id);
  const Params p = resolve_params(e, parse_params(params_text));
  e.validate(p);
  const Rect d = e.default_domain(p);
  out << "id: " << e.id << "\n"
      << "title: " << e.title << "\n"
      << "params: " << surfrev::detail::fmt_params(p) << "\n"
      << "requires: " << e.constraint_text << "\n"
      << "normalization: " << (e.norm_mode == NormMode::Absolute ? "absolute" : "principal") << "\n"
      << "revolution family: " << (e.revolution ? "yes" : "no") << "\n"
      << "domain: " << domain_text(d) << "\n";
  if (const auto ref = e.reference(p)) {
    out << "reference normal at (" << format_number(ref->s) << ", " << format_number(ref->t) << "): ("
        << format_scalar(ref->n.x1) << ", " << format_scalar(ref->n.x2) << ", " << format_scalar(ref->n.x3) << ")"
        << (ref->printed ? "" : " (derived)") << "\n";
  }
  if (!e.notes.empty()) out << "notes: " << e.notes << "\n";
  return 0;
}

inline int sample(const std::string& id, const std::string& params_text, const std::string& s_text,
                  const std::string& t_text, const std::string& path, std::ostream& out) {
  const SurfacePatch p = build(id, parse_params(params_text));
  const Axes ax = axes_for(p, s_text, t_text);
  std::ostringstream csv;
  write_sample_csv(csv, p, ax.s, ax.t);
  write_text(path, csv.str(), out);
  return 0;
}

inline int export_obj(const std::string& id, const std::string& params_text, const std::string& s_text,
                      const std::string& t_text, const std::string& path, bool real_part,
                      std::ostream& out) {
  const Params given = parse_params(params_text);
  const SurfacePatch p = build(id, given);
  const Axes ax = axes_for(p, s_text, t_text);
  const bool complex_chart = chart_is_complex(p, ax.s, ax.t);
  if (complex_chart && !real_part)
    throw UsageError(id + " has a complex chart on this grid; pass --real-part to export component real parts");
  std::ostringstream obj;
  write_obj(obj, id, resolve_params(find_entry(id), given), p, ax.s, ax.t, complex_chart);
  write_text(path, obj.str(), out);
  return 0;
}

inline int oracle(const std::string& id, const std::string& params_text, int points, std::uint64_t seed,
                  std::ostream& out) {
  const Params given = parse_params(params_text);
  const SurfacePatch p = build(id, given);
  const OracleReport rep = oracle_sweep(p, points, seed);
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [k, v] : rep.per_quantity) per[k] = surfrev::detail::number(v);
  const bool ok = rep.max_difference <= kOracleTolerance;
  const nlohmann::json j = {{"id", id},
                            {"params", params_json(resolve_params(find_entry(id), given))},
                            {"points", rep.points},
                            {"seed", seed},
                            {"fd_step", surfrev::detail::number(kDefaultFdStep)},
                            {"tolerance", surfrev::detail::number(kOracleTolerance)},
                            {"max_difference", surfrev::detail::number(rep.max_difference)},
                            {"worst", {{"quantity", rep.worst_quantity},
                                       {"s", surfrev::detail::number(rep.worst_s)},
                                       {"t", surfrev::detail::number(rep.worst_t)}}},
                            {"per_quantity", per},
                            {"verdict", ok ? "PASS" : "FAIL"}};
  out << dump_json(j);
  return ok ? 0 : 1;
}

/// A group name, "all", or one claim id such as prop6.one_type[rev1].
inline std::vector<ClaimResult> select_claims(const std::string& target, const VerifyOptions& o) {
  const auto& groups = claim_groups();
  if (target == "all" || std::find(groups.begin(), groups.end(), target) != groups.end())
    return run_claims(target, o);
  const auto dot = target.find('.');
  const std::string group = target.substr(0, dot);
  if (dot == std::string::npos || std::find(groups.begin(), groups.end(), group) == groups.end())
    throw UsageError("unknown claim '" + target + "'");
  std::vector<ClaimResult> out;
  for (auto& r : run_claims(group, o))
    if (r.claim_id == target) out.push_back(std::move(r));
  if (out.empty()) throw UsageError("unknown claim '" + target + "'");
  return out;
}

inline int verify(const std::string& target, const VerifyOptions& o, const std::string& json_path,
                  std::ostream& out) {
  const auto results = select_claims(target, o);
  if (json_path != "-") {
    for (const auto& r : results)
      out << to_string(r.verdict) << "\t" << r.claim_id << "\tresidual=" << format_number(r.max_residual)
          << "\ttol=" << format_number(r.tolerance) << "\tagreement=" << format_number(r.engine_agreement)
          << "\n";
  }
  if (!json_path.empty()) write_text(json_path, dump_json(report_json(results, o)), out);
  return exit_code(results);
}

}  // namespace detail

/// Parses and executes one command line.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Geometry of surfaces in Minkowski 3-space: sampling, export and claim checks", "surfrev"};
  app.require_subcommand(1);

  std::string id, params_text, s_text, t_text, out_path, obj_path, target = "all", grid_text, json_path;
  std::string det_text = "as_printed";
  bool real_part = false;
  int points = 100;
  std::uint64_t seed = 42;
  std::optional<double> tol;

  auto* list = app.add_subcommand("list", "List catalog entries");
  auto* describe = app.add_subcommand("describe", "Show one catalog entry");
  describe->add_option("id", id, "Entry id")->required();
  describe->add_option("--params", params_text, "Parameter overrides, e.g. a=3,b=1");

  auto* sample = app.add_subcommand("sample", "Write curvature quantities on a grid as CSV");
  sample->add_option("id", id, "Entry id")->required();
  sample->add_option("--params", params_text, "Parameter overrides, e.g. a=3,b=1");
  sample->add_option("--s", s_text, "s range lo:hi:n (hi excluded for periodic s)");
  sample->add_option("--t", t_text, "t range lo:hi:n");
  sample->add_option("--out", out_path, "CSV path, - for standard output")->default_val("-");

  auto* verify = app.add_subcommand("verify", "Check claims");
  verify->add_option("claim", target, "Claim group, claim id or all")->default_val("all");
  verify->add_option("--params", params_text, "Parameter overrides for every surface that uses the name");
  verify->add_option("--grid", grid_text, "Grid NxM");
  verify->add_option("--tol", tol, "Tolerance (default 1e-8 or SURFREV_DEFAULT_TOL)");
  verify->add_option("--json", json_path, "Write the JSON report here, - for standard output");
  verify->add_option("--seed", seed, "Seed for the engine agreement points");
  verify->add_option("--det-convention", det_text, "as_printed or signed")
      ->check(CLI::IsMember({"as_printed", "signed"}));

  auto* exp = app.add_subcommand("export", "Write a quad mesh as OBJ");
  exp->add_option("id", id, "Entry id")->required();
  exp->add_option("--params", params_text, "Parameter overrides");
  exp->add_option("--obj", obj_path, "OBJ path, - for standard output")->required();
  exp->add_option("--s", s_text, "s range lo:hi:n");
  exp->add_option("--t", t_text, "t range lo:hi:n");
  exp->add_flag("--real-part", real_part, "Export component real parts of complex charts");

  auto* orc = app.add_subcommand("oracle", "Compare the jet and finite-difference engines");
  orc->add_option("id", id, "Entry id")->required();
  orc->add_option("--params", params_text, "Parameter overrides");
  orc->add_option("--points", points, "Number of seeded points")->check(CLI::PositiveNumber);
  orc->add_option("--seed", seed, "Seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (list->parsed()) return detail::list(out);
    if (describe->parsed()) return detail::describe(id, params_text, out);
    if (sample->parsed()) return detail::sample(id, params_text, s_text, t_text, out_path, out);
    if (exp->parsed()) return detail::export_obj(id, params_text, s_text, t_text, obj_path, real_part, out);
    if (orc->parsed()) return detail::oracle(id, params_text, points, seed, out);
    if (verify->parsed()) {
      VerifyOptions o;
      o.tol = tol ? *tol : detail::default_tolerance();
      if (!(o.tol > 0)) throw UsageError("tolerance must be positive");
      if (!grid_text.empty()) o.grid = detail::parse_grid(grid_text);
      o.seed = seed;
      o.params = detail::parse_params(params_text);
      o.conv = det_text == "signed" ? SecondFormDetConvention::Signed : SecondFormDetConvention::AsPrinted;
      return detail::verify(target, o, json_path, out);
    }
  } catch (const Error& e) {
    err << "surfrev: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace surfrev::cli
