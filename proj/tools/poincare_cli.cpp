// poincare: qualitative analysis of planar polynomial systems at infinity.
#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "poincare/catalog.hpp"
#include "poincare/errors.hpp"
#include "poincare/infinity.hpp"
#include "poincare/kernels.hpp"
#include "poincare/ledger.hpp"
#include "poincare/modification.hpp"
#include "poincare/portrait.hpp"
#include "poincare/report.hpp"

namespace {

using namespace poincare;

constexpr int kExitUsage = 1;
constexpr int kExitAnalysis = 2;

struct UsageError : Error {
  using Error::Error;
};

struct SystemInput {
  std::string example;
  std::string c;
  std::string file;
  std::string p;
  std::string q;

  void attach(CLI::App* app) {
    app->add_option("--example", example, "Built-in system: P3, P4, P5, R4, R5");
    app->add_option("--c", c, "Rational parameter c for P5/R5");
    app->add_option("--file", file, "System file with 'dx/dt = ...' and 'dy/dt = ...' lines");
    app->add_option("--p", p, "dx/dt polynomial");
    app->add_option("--q", q, "dy/dt polynomial");
  }

  std::optional<ExampleName> example_name() const {
    if (example.empty()) return std::nullopt;
    auto e = parse_example_name(example);
    if (!e) throw UsageError("unknown example '" + example + "' (expected P3, P4, P5, R4 or R5)");
    return e;
  }
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

PlanarPolySystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open system file '" + path + "'");
  std::optional<BivariatePoly> p, q;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'dx/dt = <poly>'");
    std::string lhs = trim(line.substr(0, eq));
    lhs.erase(std::remove(lhs.begin(), lhs.end(), ' '), lhs.end());
    std::optional<BivariatePoly>* slot = lhs == "dx/dt" ? &p : lhs == "dy/dt" ? &q : nullptr;
    if (!slot) throw UsageError(path + ":" + std::to_string(lineno) + ": left side must be dx/dt or dy/dt");
    if (*slot) throw UsageError(path + ":" + std::to_string(lineno) + ": duplicate " + lhs);
    try {
      *slot = parse_poly(line.substr(eq + 1));
    } catch (const ParseError& e) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!p || !q) throw UsageError(path + ": both dx/dt and dy/dt are required");
  return {*p, *q};
}

std::optional<Rational> parse_c(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational(text);
}

PlanarPolySystem load_system(const SystemInput& in) {
  const int sources = !in.example.empty() + !in.file.empty() + (!in.p.empty() || !in.q.empty());
  if (sources != 1) throw UsageError("give exactly one of --example, --file, or --p/--q");
  if (auto e = in.example_name()) return get_example(*e, parse_c(in.c));
  if (!in.file.empty()) return read_system_file(in.file);
  if (in.p.empty() || in.q.empty()) throw UsageError("--p and --q must be given together");
  return {parse_poly(in.p), parse_poly(in.q)};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
  f << text;
  if (!f) throw std::runtime_error("write failed for '" + out_path + "'");
}

std::string system_text(const PlanarPolySystem& sys) {
  return "dx/dt = " + sys.p().to_string() + "\ndy/dt = " + sys.q().to_string() + "\n";
}

Json polar_json(const PolarDecomposition& pd) {
  Json eta = Json::object(), xi = Json::object();
  for (std::size_t d = 0; d < pd.eta.size(); ++d) {
    if (!pd.eta[d].is_zero()) eta[std::to_string(d)] = fourier_json(pd.eta[d]);
  }
  for (std::size_t i = 0; i < pd.xi.size(); ++i) {
    if (!pd.xi[i].is_zero()) xi[std::to_string(static_cast<int>(i) - 1)] = fourier_json(pd.xi[i]);
  }
  return {{"eta", eta}, {"xi", xi}};
}

Vec2 parse_seed(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--seed expects x,y");
  try {
    std::size_t used = 0;
    const std::string xs = trim(text.substr(0, comma)), ys = trim(text.substr(comma + 1));
    const double x = std::stod(xs, &used);
    if (used != xs.size()) throw std::invalid_argument(xs);
    const double y = std::stod(ys, &used);
    if (used != ys.size()) throw std::invalid_argument(ys);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError("--seed expects two numbers x,y, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  kernels::apply_thread_env();

  CLI::App app{"Qualitative analysis of planar polynomial systems via Poincaré compactification"};
  app.require_subcommand(1);

  SystemInput in_analyze, in_infinity, in_fixed, in_portrait;
  bool json = false;
  double box_half = 5.0;
  int grid = 64;

  auto* analyze = app.add_subcommand("analyze", "Full report: polar decomposition, equator, fixed points, invariant circles");
  in_analyze.attach(analyze);
  analyze->add_flag("--json", json, "JSON output");
  analyze->add_option("--box", box_half, "Half-width of the fixed-point search square")->check(CLI::PositiveNumber);
  analyze->add_option("--grid", grid, "Newton seed grid size per axis (>= 8)")->check(CLI::Range(8, 4096));

  auto* infinity = app.add_subcommand("infinity", "Equator report only");
  in_infinity.attach(infinity);
  infinity->add_flag("--json", json, "JSON output");

  auto* fixed = app.add_subcommand("fixed-points", "Fixed points with linearization and invariant circles");
  in_fixed.attach(fixed);
  fixed->add_flag("--json", json, "JSON output");
  fixed->add_option("--box", box_half, "Half-width of the search square")->check(CLI::PositiveNumber);
  fixed->add_option("--grid", grid, "Newton seed grid size per axis (>= 8)")->check(CLI::Range(8, 4096));

  PortraitSpec spec;
  std::vector<std::string> seeds;
  std::string out_path, format;
  bool no_default_seeds = false;
  auto* portrait = app.add_subcommand("portrait", "Global phase portrait on the Poincaré disk (SVG or CSV)");
  in_portrait.attach(portrait);
  portrait->add_option("--seed", seeds, "Extra seed x,y (repeatable)");
  portrait->add_flag("--no-default-seeds", no_default_seeds, "Drop the 48 default seeds");
  portrait->add_option("--tol", spec.tol, "Local error tolerance in [1e-12, 1e-3]");
  portrait->add_option("--tspan", spec.t_span, "Integration time in each direction");
  portrait->add_option("--margin", spec.disk_margin, "Stop when 1/sqrt(1+r²) falls below this, in (0, 0.1)");
  portrait->add_option("--format", format, "svg or csv (default: from --out extension, else svg)");
  portrait->add_option("--out", out_path, "Output file (default stdout)");

  std::string family, w_text, mod_c;
  auto* checkmod = app.add_subcommand("check-mod", "Check a modification polynomial W and analyze the modified system");
  checkmod->add_option("--family", family, "p4 or p5")->required();
  checkmod->add_option("--w", w_text, "W(x, y)")->required();
  checkmod->add_option("--c", mod_c, "Rational parameter c (p5 family)");
  checkmod->add_flag("--json", json, "JSON output");

  std::string only;
  auto* verify = app.add_subcommand("verify-paper", "Evaluate the ledger of stated features of P3, P4, P5, R4, R5");
  verify->add_flag("--json", json, "JSON output");
  verify->add_option("--only", only, "Evaluate a single claim id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const PlanarPolySystem sys = load_system(in_analyze);
      const PolarDecomposition pd = polar_decomposition(sys);
      const EquatorReport eq = classify_infinity(sys);
      const LocalSummary local = local_summary(sys, Box::square(box_half), grid);
      if (json) {
        Json j = to_json(eq);
        j["system"] = {{"p", sys.p().to_string()}, {"q", sys.q().to_string()}};
        j["polar_decomposition"] = polar_json(pd);
        j["fixed_points"] = fixed_points_json(local);
        j["invariant_circles"] = invariant_circles_json(local);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << system_text(sys) << format_text(pd) << format_text(eq) << format_text(local);
      }
    } else if (infinity->parsed()) {
      const PlanarPolySystem sys = load_system(in_infinity);
      const EquatorReport eq = classify_infinity(sys);
      std::cout << (json ? to_json(eq).dump(2) + "\n" : format_text(eq));
    } else if (fixed->parsed()) {
      const PlanarPolySystem sys = load_system(in_fixed);
      const LocalSummary local = local_summary(sys, Box::square(box_half), grid);
      if (json) {
        std::cout << Json{{"fixed_points", fixed_points_json(local)}, {"invariant_circles", invariant_circles_json(local)}}.dump(2)
                  << "\n";
      } else {
        std::cout << format_text(local);
      }
    } else if (portrait->parsed()) {
      const PlanarPolySystem sys = load_system(in_portrait);
      for (const auto& s : seeds) spec.seeds.push_back(parse_seed(s));
      spec.default_seeds = !no_default_seeds;
      if (auto e = in_portrait.example_name()) spec.nullclines = example_nullclines(*e);
      if (format.empty()) format = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv" ? "csv" : "svg";
      if (format != "svg" && format != "csv") throw UsageError("--format must be svg or csv");
      validate(spec);
      emit(render(sys, spec, format == "svg" ? PortraitFormat::svg : PortraitFormat::csv), out_path);
    } else if (checkmod->parsed()) {
      Family fam;
      if (family == "p4") {
        fam = Family::p4;
      } else if (family == "p5") {
        fam = Family::p5;
      } else {
        throw UsageError("--family must be p4 or p5");
      }
      const ModificationSpec mspec(parse_poly(w_text), fam);
      const FullReport rep = full_report(mspec, parse_c(mod_c));
      std::cout << (json ? to_json(rep).dump(2) + "\n" : format_text(rep));
      if (rep.status == ReportStatus::internal_inconsistency) return kExitAnalysis;
    } else if (verify->parsed()) {
      const Ledger ledger = verify_paper(only.empty() ? std::nullopt : std::optional<std::string_view>(only));
      std::cout << (json ? to_json(ledger).dump(2) + "\n" : format_text(ledger));
      return ledger.exit_code();
    }
  } catch (const AnalysisError& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return kExitAnalysis;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  }
  return 0;
}
