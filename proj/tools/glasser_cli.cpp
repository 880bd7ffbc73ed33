// Command-line front end for the f(a,b) integral family and its identity
// audit.  Subcommands:
//
//   eval      evaluate one representation (or all applicable ones)
//   verify    full pairwise audit at a single (a,b)
//   grid      audit over a Cartesian (a,b) grid, written to a file
//   gr-check  the headline check: elliptic closed form confirmed,
//             table value pi/(2 sqrt6) refuted
//
// Exit codes: 0 success, 1 non-convergence or failed verdict, 2 usage
// error, 3 domain error, 4 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glasser/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

double parse_b(const std::string& text) {
  if (text == "sqrt3") return glasser::kSqrt3;
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--b", "expected a number or the token 'sqrt3'");
  }
}

std::vector<double> parse_b_list(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const auto& s : items) out.push_back(parse_b(s));
  return out;
}

double comparison_tolerance_default() {
  if (const char* env = std::getenv("GLASSER_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw std::domain_error("GLASSER_TOL is not a number");
    }
  }
  return 1e-9;
}

struct CommonOpts {
  double a = 1.5;
  std::string b_text = "sqrt3";
  double tol = 0;  // filled from GLASSER_TOL / default after parse
  double quad_tol = 1e-12;
  std::string format = "table";
};

void add_format_option(CLI::App* cmd, std::string& fmt) {
  cmd->add_option("--format", fmt, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->default_val("table");
}

std::string render_entries(const std::vector<glasser::AuditEntry>& entries,
                           const std::string& fmt) {
  if (fmt == "json") {
    glasser::ordered_json arr = glasser::ordered_json::array();
    for (const auto& e : entries) arr.push_back(glasser::to_json(e));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  if (fmt == "csv") {
    out << "rep,status,value,error_estimate\n";
    for (const auto& e : entries) {
      out << e.rep.rep_id << ',' << glasser::to_string(e.rep.status) << ',';
      if (e.rep.status == glasser::RepStatus::kOk) {
        out << glasser::format_double(e.rep.value) << ','
            << glasser::format_double(e.rep.error_estimate);
      } else {
        out << ',';
      }
      out << '\n';
    }
    return out.str();
  }
  for (const auto& e : entries) {
    out << e.rep.rep_id << ": ";
    if (e.rep.status == glasser::RepStatus::kOk) {
      out << glasser::format_double(e.rep.value) << " (err est "
          << glasser::format_double(e.rep.error_estimate) << ")";
    } else {
      out << glasser::to_string(e.rep.status);
      if (!e.rep.detail.empty()) out << " [" << e.rep.detail << "]";
    }
    out << '\n';
  }
  return out.str();
}

int run_eval(const CommonOpts& opts, const std::string& rep) {
  const glasser::Params p(opts.a, parse_b(opts.b_text));
  glasser::ToleranceSpec qtol;
  qtol.abs_tol = opts.quad_tol;
  std::vector<glasser::AuditEntry> entries;
  if (rep == "all") {
    for (const auto& tag : glasser::representation_tags()) {
      if (!glasser::representation_applies(tag, p.a, p.b)) continue;
      entries.push_back(glasser::evaluate_representation(tag, p, qtol));
    }
  } else {
    bool known = false;
    for (const auto& tag : glasser::representation_tags()) known |= tag == rep;
    if (!known) throw CLI::ValidationError("--rep", "unknown representation tag: " + rep);
    if (!glasser::representation_applies(rep, p.a, p.b)) {
      throw std::domain_error("representation '" + rep +
                              "' is not applicable at this (a,b)");
    }
    entries.push_back(glasser::evaluate_representation(rep, p, qtol));
  }
  std::cout << render_entries(entries, opts.format);
  for (const auto& e : entries) {
    if (e.rep.status == glasser::RepStatus::kNoConvergence) return kExitFailure;
  }
  return kExitOk;
}

int run_verify(const CommonOpts& opts) {
  const glasser::Params p(opts.a, parse_b(opts.b_text));
  glasser::ToleranceSpec qtol;
  qtol.abs_tol = opts.quad_tol;
  const glasser::IdentityReport report =
      glasser::evaluate_all(p, opts.tol, qtol);
  if (opts.format == "json") {
    std::cout << glasser::to_json(report).dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << glasser::report_to_csv(report);
  } else {
    std::cout << glasser::report_to_table(report);
  }
  return report.clean() ? kExitOk : kExitFailure;
}

int run_grid(const CommonOpts& opts, const std::vector<double>& a_list,
             const std::vector<std::string>& b_items,
             const std::string& out_path) {
  std::vector<double> as = a_list.empty() ? glasser::default_a_grid() : a_list;
  std::vector<double> bs =
      b_items.empty() ? glasser::default_b_grid() : parse_b_list(b_items);
  for (double a : as) (void)glasser::Params(a, 1.0);  // domain check up front
  for (double b : bs) (void)glasser::Params(1.0, b);
  glasser::ToleranceSpec qtol;
  qtol.abs_tol = opts.quad_tol;
  const auto reports = glasser::audit_grid(as, bs, opts.tol, qtol);

  std::string payload;
  if (opts.format == "json") {
    glasser::ordered_json arr = glasser::ordered_json::array();
    for (const auto& r : reports) arr.push_back(glasser::to_json(r));
    payload = arr.dump(2) + "\n";
  } else if (opts.format == "csv") {
    payload = glasser::reports_to_csv(reports);
  } else {
    std::ostringstream out;
    for (const auto& r : reports) out << glasser::report_to_table(r) << '\n';
    payload = out.str();
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot open output file: " << out_path << "\n";
      return kExitIo;
    }
    out << payload;
    if (!out.good()) {
      std::cerr << "error: write failed: " << out_path << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

int run_gr_check(const CommonOpts& opts) {
  glasser::ToleranceSpec qtol;
  qtol.abs_tol = opts.quad_tol;
  const glasser::GrCheckResult r = glasser::gr_check(1e-9, 1e-3, qtol);
  if (opts.format == "json") {
    std::cout << glasser::to_json(r).dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "check,result,delta\n"
              << "arias-closed-form,"
              << (r.arias_confirmed ? "CONFIRMED" : "NOT-CONFIRMED") << ','
              << glasser::format_double(r.arias_delta) << '\n'
              << "gr-3.248.5," << (r.gr_refuted ? "REFUTED" : "NOT-REFUTED")
              << ',' << glasser::format_double(r.gap) << '\n';
  } else {
    std::cout << "elliptic closed form vs quadrature: "
              << (r.arias_confirmed ? "CONFIRMED" : "NOT-CONFIRMED")
              << " (|delta| = " << glasser::format_double(r.arias_delta)
              << ")\n"
              << "table value pi/(2 sqrt6): "
              << (r.gr_refuted ? "REFUTED" : "NOT-REFUTED")
              << " (gap = " << glasser::format_double(r.gap) << ")\n";
  }
  return r.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evaluator and identity auditor for the integral family f(a,b)"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string rep = "all";
  std::vector<double> a_list;
  std::vector<std::string> b_items;
  std::string out_path;

  CLI::App* eval = app.add_subcommand("eval", "evaluate representations at (a,b)");
  eval->add_option("--a", opts.a, "exponent a (> 1/2)")->required();
  eval->add_option("--b", opts.b_text, "parameter b (> 0), or 'sqrt3'")->required();
  eval->add_option("--rep", rep, "representation tag or 'all'")->default_val("all");
  eval->add_option("--quad-tol", opts.quad_tol, "quadrature tolerance");
  add_format_option(eval, opts.format);

  CLI::App* verify = app.add_subcommand("verify", "pairwise identity audit at (a,b)");
  verify->add_option("--a", opts.a, "exponent a (> 1/2)");
  verify->add_option("--b", opts.b_text, "parameter b (> 0), or 'sqrt3'");
  verify->add_option("--tol", opts.tol, "comparison tolerance");
  verify->add_option("--quad-tol", opts.quad_tol, "quadrature tolerance");
  add_format_option(verify, opts.format);

  CLI::App* grid = app.add_subcommand("grid", "audit a Cartesian (a,b) grid");
  grid->add_option("--a-list", a_list, "a values (default: built-in grid)");
  grid->add_option("--b-list", b_items, "b values, numbers or 'sqrt3'");
  grid->add_option("--tol", opts.tol, "comparison tolerance");
  grid->add_option("--quad-tol", opts.quad_tol, "quadrature tolerance");
  grid->add_option("--out", out_path, "output path ('-' for stdout)")->default_val("-");
  add_format_option(grid, opts.format);

  CLI::App* grc = app.add_subcommand("gr-check", "confirm the closed form, refute pi/(2 sqrt6)");
  grc->add_option("--quad-tol", opts.quad_tol, "quadrature tolerance");
  add_format_option(grc, opts.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (opts.tol == 0) opts.tol = comparison_tolerance_default();
    if (eval->parsed()) return run_eval(opts, rep);
    if (verify->parsed()) return run_verify(opts);
    if (grid->parsed()) return run_grid(opts, a_list, b_items, out_path);
    if (grc->parsed()) return run_gr_check(opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
