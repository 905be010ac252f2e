// Command-line front end: run scripts, audit the built-in construction
// catalog, scan geography windows, and manipulate presentations.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fourcalc/catalog.hpp"
#include "fourcalc/covers.hpp"
#include "fourcalc/geography.hpp"
#include "fourcalc/json_io.hpp"
#include "fourcalc/pipelines.hpp"
#include "fourcalc/script.hpp"
#include "fourcalc/smith.hpp"
#include "fourcalc/textio.hpp"
#include "fourcalc/tietze.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fourcalc::BadParameter("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_run(const std::string& path) {
  fourcalc::Script script = fourcalc::parse_script(read_file(path));
  fourcalc::RunResult result = fourcalc::run_script(script);
  for (const std::string& line : result.transcript) std::cout << line << "\n";
  return result.exit_code;
}

int cmd_audit(bool as_json) {
  std::vector<fourcalc::AuditRow> rows = fourcalc::audit();
  if (as_json) {
    std::cout << fourcalc::audit_to_json(rows).dump(2) << "\n";
    return 0;
  }
  size_t mismatches = 0;
  for (const fourcalc::AuditRow& r : rows) {
    bool match = r.status == fourcalc::AuditStatus::Match;
    if (!match) ++mismatches;
    std::cout << (match ? "MATCH    " : "MISMATCH ") << r.claim_id << ": stated " << r.stated
              << ", computed " << r.computed << "  [" << r.citation << "]\n";
  }
  std::cout << rows.size() << " claims, " << mismatches << " mismatches\n";
  return 0;  // mismatches are findings, not tool failures
}

fourcalc::LatticePoint base_point(const std::string& name) {
  if (name == "S") {
    fourcalc::CoverSurface cs = fourcalc::quadrangle_cover_surface(5);
    return {cs.invariants.chi_h.value(), cs.invariants.c1_sq, "S"};
  }
  fourcalc::PipelineResult pr = fourcalc::run_named_pipeline(name);
  return {pr.state.invariants.chi_h.value(), pr.state.invariants.c1_sq, name};
}

int cmd_scan(fourcalc::i64 chi_min, fourcalc::i64 chi_max, std::optional<fourcalc::i64> c_min,
             std::optional<fourcalc::i64> c_max, const std::vector<std::string>& base_names,
             const std::string& out_path) {
  std::vector<fourcalc::LatticePoint> bases;
  for (const std::string& n : base_names) bases.push_back(base_point(n));
  if ((!c_min || !c_max) && bases.empty())
    throw fourcalc::BadParameter("scan: --c-min/--c-max required when no --base is given");
  // default to the span the bases can reach inside the chi window
  if (!c_min) {
    c_min = bases.front().c1_sq;
    for (const auto& b : bases) c_min = std::min(*c_min, b.c1_sq);
  }
  if (!c_max) {
    c_max = bases.front().c1_sq;
    for (const auto& b : bases)
      c_max = std::max(*c_max, b.c1_sq + 8 * std::max<fourcalc::i64>(chi_max - b.chi_h, 0));
  }
  std::string csv;
  if (chi_min > chi_max || *c_min > *c_max) {
    csv = fourcalc::scan_to_csv({});  // empty window: header only
  } else {
    fourcalc::ScanWindow w{chi_min, chi_max, *c_min, *c_max};
    csv = fourcalc::scan_to_csv(fourcalc::lattice_scan(w, bases));
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw fourcalc::BadParameter("cannot write file: " + out_path);
  out << csv;
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_catalog() {
  for (const fourcalc::CatalogEntry& e : fourcalc::catalog_list()) {
    std::cout << e.name;
    if (!e.params.empty()) std::cout << " " << e.params;
    std::cout << "\n    " << e.description << "\n";
  }
  std::cout << "pipelines: Z3, Z2, M14, M25, M35, Sn(n)\n";
  return 0;
}

int cmd_pi1(const std::string& path, bool do_abelianize, bool do_simplify, fourcalc::i64 budget) {
  fourcalc::Presentation p = fourcalc::parse_presentation(read_file(path));
  if (do_simplify) {
    fourcalc::TietzeResult r = fourcalc::tietze_simplify(p, budget);
    for (const fourcalc::TietzeStep& step : r.transcript)
      std::cout << "  " << step.description << " -> " << step.after.generators.size()
                << " generators, " << step.after.relators.size() << " relators\n";
    std::cout << fourcalc::presentation_to_string(r.result);
    std::cout << (r.trivialized ? "trivial (certified by elimination)\n"
                                : "not reduced to the trivial presentation\n");
    std::cout << "abelianization: " << fourcalc::abelianize(r.result).to_string() << "\n";
    return 0;
  }
  if (do_abelianize) {
    std::cout << fourcalc::abelianize(p).to_string() << "\n";
    return 0;
  }
  std::cout << fourcalc::presentation_to_string(p);
  std::cout << "abelianization: " << fourcalc::abelianize(p).to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant calculus for closed 4-manifold constructions"};
  app.require_subcommand(1);

  std::string run_path;
  CLI::App* run = app.add_subcommand("run", "execute a construction script");
  run->add_option("file", run_path, "script file")->required();

  bool audit_json = false;
  CLI::App* audit_cmd = app.add_subcommand("audit", "recompute every cataloged claim");
  audit_cmd->add_flag("--json", audit_json, "emit JSON rows");

  fourcalc::i64 chi_min = 0, chi_max = 0;
  std::optional<fourcalc::i64> c_min, c_max;
  std::vector<std::string> scan_bases;
  std::string scan_out;
  CLI::App* scan = app.add_subcommand("scan", "write a geography window as CSV");
  scan->add_option("--chi-min", chi_min)->required();
  scan->add_option("--chi-max", chi_max)->required();
  scan->add_option("--c-min", c_min, "lower c1^2 bound (default: span of the bases)");
  scan->add_option("--c-max", c_max, "upper c1^2 bound (default: span of the bases)");
  scan->add_option("--base", scan_bases, "base manifolds (S, Z3, Z2, M14, M25, M35)");
  scan->add_option("--out", scan_out, "output CSV path")->required();

  app.add_subcommand("catalog", "list building blocks and pipelines");

  std::string pi1_path;
  bool pi1_abelianize = false, pi1_simplify = false;
  fourcalc::i64 pi1_budget = 100000;
  CLI::App* pi1 = app.add_subcommand("pi1", "inspect a presentation file");
  pi1->add_option("file", pi1_path, "presentation file")->required();
  pi1->add_flag("--abelianize", pi1_abelianize, "print H1 only");
  pi1->add_flag("--simplify", pi1_simplify, "run Tietze simplification");
  pi1->add_option("--budget", pi1_budget, "simplification work budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(run_path);
    if (audit_cmd->parsed()) return cmd_audit(audit_json);
    if (scan->parsed()) return cmd_scan(chi_min, chi_max, c_min, c_max, scan_bases, scan_out);
    if (app.get_subcommand("catalog")->parsed()) return cmd_catalog();
    if (pi1->parsed()) return cmd_pi1(pi1_path, pi1_abelianize, pi1_simplify, pi1_budget);
  } catch (const fourcalc::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;  // the script ran and failed
  } catch (const fourcalc::ScriptError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // malformed input
  } catch (const fourcalc::CalcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
