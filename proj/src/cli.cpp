#include "moshinsky/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "moshinsky/figures.hpp"
#include "moshinsky/verify.hpp"

namespace moshinsky::cli {

namespace {

struct Options {
  std::string quantity;
  std::string figure;
  std::string suite = "all";
  std::optional<double> k_min;
  std::optional<double> k_max;
  std::optional<int> steps;
  std::string out_path;
  std::optional<double> tol;
  EvalArgs eval;
};

void add_value_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--K", o.eval.k, "coupling constant K >= 0");
  cmd.add_option("--E", o.eval.e, "correlation energy >= 0");
  cmd.add_option("--lambda", o.eval.lambda, "two-site Ising coupling >= 0");
  cmd.add_option("--C", o.eval.concurrence, "concurrence in [0, 1)");
  cmd.add_option("--r", o.eval.r, "radius for the one-particle densities");
  cmd.add_option("--alpha", o.eval.alpha, "deviation weight (default: alpha-min)");
  cmd.add_option("--n", o.eval.n, "centre-of-mass quantum number");
  cmd.add_option("--m", o.eval.m, "relative-motion quantum number");
  cmd.add_option("--quad-points", o.eval.quad_points, "Gauss-Legendre points on [0, 1]")
      ->check(CLI::Range(32, 4096));
}

void list_quantities(std::ostream& out) {
  for (const auto& q : quantity_registry()) {
    out << "  " << std::left << std::setw(26) << q.name;
    const char* flag = parameter_flag(q.parameter);
    out << std::setw(10) << (*flag ? std::string("--") + flag : std::string("-")) << q.description << '\n';
  }
}

int do_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const auto* q = find_quantity(o.quantity);
  if (q == nullptr) {
    err << "unknown quantity '" << o.quantity << "'; known quantities:\n";
    list_quantities(err);
    return kUsage;
  }
  out << format_real(q->evaluate(o.eval)) << '\n';
  return kSuccess;
}

int do_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepTable table;
  if (!o.figure.empty()) {
    if (!is_figure(o.figure)) {
      err << "unknown figure '" << o.figure << "' (expected fig1 .. fig10)\n";
      return kUsage;
    }
    table = figure_table(o.figure, o.k_min, o.k_max, o.steps, o.eval.quad_points);
  } else if (!o.quantity.empty()) {
    const auto* q = find_quantity(o.quantity);
    if (q == nullptr) {
      err << "unknown quantity '" << o.quantity << "'\n";
      return kUsage;
    }
    SweepRange range;
    range.min = o.k_min.value_or(range.min);
    range.max = o.k_max.value_or(range.max);
    range.points = o.steps.value_or(range.points);
    table = quantity_sweep(*q, range, o.eval);
  } else {
    err << "sweep needs --figure or --quantity\n";
    return kUsage;
  }

  if (o.out_path.empty()) {
    table.write_csv(out);
    return kSuccess;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "cannot open '" << o.out_path << "' for writing\n";
    return kIo;
  }
  table.write_csv(file);
  file.close();
  if (!file) {
    err << "failed writing '" << o.out_path << "'\n";
    return kIo;
  }
  out << "wrote " << table.rows().size() << " rows to " << o.out_path << '\n';
  return kSuccess;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_verify_suite(o.suite)) {
    err << "unknown suite '" << o.suite << "' (expected all, analytic, oracle, roundtrip)\n";
    return kUsage;
  }
  if (o.tol && !(*o.tol > 0.0)) {
    err << "--tol must be > 0\n";
    return kUsage;
  }
  const auto results = run_verify(o.suite, o.tol);
  bool ok = true;
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s max_err=%.3e tol=%.1e  %s\n", r.passed() ? "PASS" : "FAIL",
                  r.max_error, r.tolerance, r.name.c_str());
    out << line;
    ok = ok && r.passed();
  }
  out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kSuccess : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moshinsky model: energies, entanglement and their numerical cross-checks"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  eval->add_option("name", o.quantity, "quantity name (same as --quantity)");
  eval->add_option("--quantity", o.quantity, "quantity name");
  add_value_options(*eval, o);
  bool list = false;
  eval->add_flag("--list", list, "list known quantities");

  auto* sweep = app.add_subcommand("sweep", "tabulate a figure or quantity as CSV");
  sweep->add_option("--figure", o.figure, "fig1 .. fig10");
  sweep->add_option("--quantity", o.quantity, "quantity name");
  sweep->add_option("--k-min", o.k_min, "first grid value");
  sweep->add_option("--k-max", o.k_max, "last grid value");
  sweep->add_option("--steps", o.steps, "number of grid points (>= 2)");
  sweep->add_option("--out", o.out_path, "CSV output path (default: stdout)");
  add_value_options(*sweep, o);

  auto* verify = app.add_subcommand("verify", "run self-consistency suites");
  verify->add_option("name", o.suite, "all | analytic | oracle | roundtrip");
  verify->add_option("--suite", o.suite, "all | analytic | oracle | roundtrip");
  verify->add_option("--tol", o.tol, "tolerance applied to every check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (eval->parsed()) {
      if (list) {
        list_quantities(out);
        return kSuccess;
      }
      if (o.quantity.empty()) {
        err << "eval needs a quantity; known quantities:\n";
        list_quantities(err);
        return kUsage;
      }
      return do_eval(o, out, err);
    }
    if (sweep->parsed()) return do_sweep(o, out, err);
    return do_verify(o, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

}  // namespace moshinsky::cli
