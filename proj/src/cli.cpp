#include "ramrec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramrec/engine.hpp"
#include "ramrec/expr.hpp"

namespace ramrec {

namespace {

using nlohmann::json;

struct CliConfig {
  std::string x_expr;
  std::string y_expr;
  std::string base_point = "inf";
  long truncation_order = 0;  // 0 = default formula
  bool swap_sides = false;
  std::string output = "text";
};

void load_config_file(const std::string& path, std::map<std::string, std::string>& kv) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ValidationError, "cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
}

SpectralCurve build_curve(const CliConfig& cfg) {
  if (cfg.x_expr.empty() || cfg.y_expr.empty())
    fail(ErrorKind::ValidationError, "both --x and --y (or config keys x, y) are required");
  SpectralCurve c;
  c.x = parse_curve_function(cfg.x_expr);
  c.y = parse_curve_function(cfg.y_expr);
  if (cfg.base_point != "inf" && cfg.base_point != "")
    c.base_point = parse_rational(cfg.base_point);
  c.truncation_order = cfg.truncation_order;
  if (cfg.swap_sides) c = swapped(c);
  return c;
}

std::string differential_marker(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (i ? " " : "") + ("dp" + std::to_string(i));
  return s;
}

json series_to_json(const FieldSeries& s) {
  json coeffs = json::array();
  for (long e = s.val(); e < s.val() + static_cast<long>(s.span()); ++e)
    coeffs.push_back(json::array({e, s.coeff(e).to_string()}));
  json j;
  j["var"] = "s";
  j["valuation"] = s.known_zero() ? nullptr : json(s.val());
  j["order"] = s.is_exact() ? json("exact") : json(s.order());
  j["coeffs"] = coeffs;
  return j;
}

json report_to_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["status"] = r.pass ? "pass" : "fail";
  j["details"] = r.details;
  j["ms"] = r.ms;
  return j;
}

void print_report_text(const CheckReport& r, std::ostream& out) {
  out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", r.ms);
  out << "  (" << buf << " ms)\n";
  for (const auto& d : r.details) out << "      " << d << "\n";
}

int cmd_ram(const CliConfig& cfg, std::ostream& out) {
  Engine eng(build_curve(cfg), 2, 1, RecursionMode::General, false);
  const CurveAnalysis& A = eng.analysis();
  if (cfg.output == "json") {
    json j;
    j["conductor"] = A.conductor;
    j["truncation_order"] = A.work_order;
    j["warnings"] = A.warnings;
    json pts = json::array();
    for (const auto& pt : A.points) {
      json p;
      p["location"] = pt.label();
      p["index"] = pt.index;
      json decks = json::array();
      for (const auto& d : pt.decks) decks.push_back(series_to_json(d));
      p["decks"] = decks;
      p["phi"] = series_to_json(pt.phi);
      pts.push_back(std::move(p));
    }
    j["points"] = pts;
    out << j.dump(2) << "\n";
  } else {
    out << "conductor: " << A.conductor << "\n";
    out << "truncation order: " << A.work_order << "\n";
    for (const auto& w : A.warnings) out << "warning: " << w << "\n";
    for (const auto& pt : A.points) {
      out << "ramification point t = " << pt.label() << ", index " << pt.index << "\n";
      for (size_t j = 0; j < pt.decks.size(); ++j)
        out << "  deck " << (j + 1) << ": " << pt.decks[j].to_string() << "\n";
      out << "  phi: " << pt.phi.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_wgn(const CliConfig& cfg, int g, int n, std::ostream& out) {
  Engine eng(build_curve(cfg), g, n, RecursionMode::General, true);
  RationalFunction w = eng.wgn(g, n);
  if (cfg.output == "json") {
    json j;
    j["g"] = g;
    j["n"] = n;
    j["conductor"] = eng.analysis().conductor;
    j["truncation_order"] = eng.analysis().work_order;
    j["w"] = json::parse(w.to_json_string());
    json diffs = json::array();
    for (int i = 0; i < n; ++i) diffs.push_back("dp" + std::to_string(i));
    j["differentials"] = diffs;
    out << j.dump(2) << "\n";
  } else {
    out << w.to_string() << " · " << differential_marker(n) << "\n";
  }
  return 0;
}

int cmd_free(const CliConfig& cfg, int g, std::ostream& out) {
  Engine eng(build_curve(cfg), g, 1, RecursionMode::General, true);
  Rational f = eng.free_energy(g);
  if (cfg.output == "json") {
    json j;
    j["g"] = g;
    j["value"] = f.str();
    j["conductor"] = eng.analysis().conductor;
    j["truncation_order"] = eng.analysis().work_order;
    out << j.dump(2) << "\n";
  } else {
    out << f.str() << "\n";
  }
  return 0;
}

struct CheckSelection {
  bool all = false, symmetry = false, dilaton = false, w03 = false, residue = false;
};

int cmd_check(const CliConfig& cfg, const CheckSelection& sel0, int gmax, int nmax,
              std::ostream& out) {
  CheckSelection sel = sel0;
  if (!(sel.symmetry || sel.dilaton || sel.w03 || sel.residue)) sel.all = true;
  if (sel.all) sel.symmetry = sel.dilaton = sel.w03 = sel.residue = true;
  Engine eng(build_curve(cfg), gmax, nmax, RecursionMode::General, false);
  CorrelatorStore& store = eng.store();
  // Fill the tower the batteries will inspect.
  for (int g = 0; g <= gmax; ++g)
    for (int n = 1; n <= nmax; ++n)
      if (2 * g - 2 + n > 0) store.w(g, n);
  if (sel.w03) store.w(0, 3);

  std::vector<CheckReport> reports;
  if (sel.symmetry)
    for (auto [g, n] : store.memoized_keys())
      if (n >= 2) reports.push_back(store.check_symmetry(g, n));
  if (sel.dilaton)
    for (int g = 0; g <= gmax; ++g)
      for (int n = 1; n + 1 <= nmax; ++n)
        if (2 * g - 2 + n > 0) reports.push_back(store.check_dilaton(g, n));
  if (sel.w03) reports.push_back(store.check_w03());
  if (sel.residue)
    for (int g = 2; g <= gmax; ++g) reports.push_back(store.check_residueless(g));
  if (sel.all) reports.push_back(store.check_deck_closure());

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  if (cfg.output == "json") {
    json j;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
    j["status"] = ok ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(r, out);
    out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_swap_compare(const CliConfig& cfg, int gmax, std::ostream& out) {
  SwapCompareReport rep = symplectic_compare(build_curve(cfg), gmax, true);
  if (cfg.output == "json") {
    json j;
    j["errors"] = rep.errors;
    json per_g = json::array();
    for (const auto& e : rep.entries) {
      json je;
      je["g"] = e.g;
      je["F"] = e.f.str();
      je["F_swapped"] = e.f_swapped.str();
      je["equal"] = e.equal;
      je["difference"] = e.difference.str();
      per_g.push_back(std::move(je));
    }
    j["per_g"] = per_g;
    j["all_equal"] = rep.entries.empty() ? json(nullptr) : json(rep.all_equal());
    out << j.dump(2) << "\n";
  } else {
    for (const auto& err : rep.errors) out << "error: " << err << "\n";
    for (const auto& e : rep.entries) {
      out << "g=" << e.g << ": F = " << e.f.str() << ", swapped F = " << e.f_swapped.str()
          << (e.equal ? "  (equal)" : "  (UNEQUAL, difference " + e.difference.str() + ")")
          << "\n";
    }
  }
  if (!rep.errors.empty()) return 2;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact topological recursion on genus-0 spectral curves"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string config_path;
  app.add_option("--x", cfg.x_expr, "expression for x(t)");
  app.add_option("--y", cfg.y_expr, "expression for y(t)");
  app.add_option("--config", config_path, "config file with x=, y=, base_point=, truncation_order=");
  app.add_option("--base-point", cfg.base_point, "kernel base point: 'inf' or a rational");
  app.add_option("--truncation-order", cfg.truncation_order, "working series order override");
  app.add_flag("--swap", cfg.swap_sides, "exchange x and y before running the command");
  app.add_option("--output", cfg.output, "output mode: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* c_ram = app.add_subcommand("ram", "list ramification points with deck series");
  int wg = 0, wn = 1;
  auto* c_wgn = app.add_subcommand("wgn", "print the correlation function W^g_n");
  c_wgn->add_option("--g", wg, "genus")->required();
  c_wgn->add_option("--n", wn, "number of points")->required();
  int fg = 2;
  auto* c_free = app.add_subcommand("free", "print the free energy F_g");
  c_free->add_option("--g", fg, "genus (>= 2)")->required();
  CheckSelection sel;
  int cg = 2, cn = 3;
  auto* c_check = app.add_subcommand("check", "run verification batteries");
  c_check->add_flag("--all", sel.all, "run every battery (default)");
  c_check->add_flag("--symmetry", sel.symmetry, "permutation symmetry of memoized W^g_n");
  c_check->add_flag("--dilaton", sel.dilaton, "dilaton equation for available (g,n)");
  c_check->add_flag("--w03", sel.w03, "direct residue formula for W^0_3");
  c_check->add_flag("--residue", sel.residue, "residuelessness of W^g_1 and base independence");
  c_check->add_option("--gmax", cg, "largest genus in the tower (default 2)");
  c_check->add_option("--nmax", cn, "largest point count in the tower (default 3)");
  int sg = 2;
  auto* c_swap = app.add_subcommand("swap-compare", "compare F_g between (x,y) and (y,x)");
  c_swap->add_option("--gmax", sg, "compare F_2..F_gmax (default 2)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help() << "\n";
      return 0;
    }
    err << "error: ParseError: " << e.what() << "\n";
    return 3;
  }

  try {
    // Config file < environment < flags.
    if (!config_path.empty()) {
      std::map<std::string, std::string> kv;
      load_config_file(config_path, kv);
      if (cfg.x_expr.empty() && kv.count("x")) cfg.x_expr = kv["x"];
      if (cfg.y_expr.empty() && kv.count("y")) cfg.y_expr = kv["y"];
      if (cfg.base_point == "inf" && kv.count("base_point")) cfg.base_point = kv["base_point"];
      if (cfg.truncation_order == 0 && kv.count("truncation_order"))
        cfg.truncation_order = std::stol(kv["truncation_order"]);
    }
    if (const char* env = std::getenv("RAMREC_TRUNCATION")) {
      if (cfg.truncation_order == 0 && *env) cfg.truncation_order = std::atol(env);
    }

    if (c_ram->parsed()) return cmd_ram(cfg, out);
    if (c_wgn->parsed()) return cmd_wgn(cfg, wg, wn, out);
    if (c_free->parsed()) return cmd_free(cfg, fg, out);
    if (c_check->parsed()) return cmd_check(cfg, sel, cg, cn, out);
    if (c_swap->parsed()) return cmd_swap_compare(cfg, sg, out);
    err << "error: ValidationError: no command given\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ramrec
