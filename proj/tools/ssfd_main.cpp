// Command line harness for the ssfd solver library: run single problems or
// suites, emit result tables, and regression-check objective values.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssfd/bench.hpp"
#include "ssfd/errors.hpp"
#include "ssfd/problem.hpp"
#include "ssfd/solver.hpp"

namespace {

ssfd::Vector parse_csv_vector(const std::string& text) {
  ssfd::Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ssfd::ConfigError("bad x0 entry '" + item + "'");
    }
  }
  if (v.empty()) throw ssfd::ConfigError("empty x0");
  return v;
}

struct CommonOpts {
  std::string params_file;
  std::vector<std::string> sets;
  std::string format = "markdown";
  std::string out_path;
  bool strict = false;
  int max_iter = -1;
  double tol = -1.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--params", o.params_file, "solver parameter file (key=value lines)");
  cmd->add_option("--set", o.sets, "override one solver parameter, e.g. --set theta=0.45")
      ->expected(-1);
  cmd->add_option("--format", o.format, "output format: json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  cmd->add_option("--out", o.out_path, "write the table to this path instead of stdout");
  cmd->add_flag("--strict", o.strict, "fail (exit 1) unless every row matches its reference value");
  cmd->add_option("--max-iter", o.max_iter, "iteration cap");
  cmd->add_option("--tol", o.tol, "stopping threshold on ||d0||");
}

ssfd::SolverParams build_params(const CommonOpts& o) {
  ssfd::SolverParams p;
  if (const char* env = std::getenv("SSFD_PARAMS"); env && *env)
    p = ssfd::load_params_file(env);
  if (!o.params_file.empty()) p = ssfd::load_params_file(o.params_file);
  for (const std::string& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ssfd::ConfigError("--set expects key=value, got " + kv);
    ssfd::apply_param(p, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.max_iter > 0) p.max_iter = o.max_iter;
  if (o.tol > 0) p.tol_d0 = o.tol;
  p.validate();
  return p;
}

int run_and_emit(const ssfd::RunConfig& cfg) {
  const auto rows = ssfd::run(cfg);
  const std::string table = ssfd::emit_table(rows, cfg.format);
  if (cfg.out_path.empty()) {
    std::cout << table;
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) throw ssfd::ConfigError("cannot write to '" + cfg.out_path + "'");
    out << table;
  }
  bool ok = true;
  if (cfg.strict) {
    const auto outcome = ssfd::regression_check(rows, ssfd::resolve_cases(cfg));
    std::cerr << outcome.summary;
    ok = outcome.pass;
  } else {
    for (const auto& r : rows) ok = ok && r.status == "KktPoint";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly sub-feasible SQP benchmark harness"};
  app.require_subcommand(1);

  std::string problem, suite, x0_text;

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve one problem");
  CommonOpts solve_opts;
  solve_cmd->add_option("--problem", problem, "problem name, e.g. hs035 or svanberg-10")
      ->required();
  solve_cmd->add_option("--x0", x0_text, "comma separated start point override");
  add_common(solve_cmd, solve_opts);

  CLI::App* suite_cmd = app.add_subcommand("suite", "solve a whole suite");
  CommonOpts suite_opts;
  suite_cmd->add_option("--suite", suite, "hs, svanberg, toy or all")
      ->required()
      ->check(CLI::IsMember({"hs", "svanberg", "toy", "all"}));
  add_common(suite_cmd, suite_opts);

  CLI::App* grad_cmd = app.add_subcommand("check-gradients", "finite-difference gradient check");
  std::string grad_problem;
  grad_cmd->add_option("--problem", grad_problem, "problem name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) {
      ssfd::RunConfig cfg;
      cfg.problem = problem;
      if (!x0_text.empty()) cfg.x0_override = parse_csv_vector(x0_text);
      cfg.params = build_params(solve_opts);
      cfg.format = ssfd::parse_format(solve_opts.format);
      cfg.strict = solve_opts.strict;
      cfg.out_path = solve_opts.out_path;
      return run_and_emit(cfg);
    }
    if (suite_cmd->parsed()) {
      ssfd::RunConfig cfg;
      cfg.suite = suite;
      cfg.params = build_params(suite_opts);
      cfg.format = ssfd::parse_format(suite_opts.format);
      cfg.strict = suite_opts.strict;
      cfg.out_path = suite_opts.out_path;
      return run_and_emit(cfg);
    }
    if (grad_cmd->parsed()) {
      const ssfd::BenchmarkCase c = ssfd::find_case(grad_problem);
      double worst = 0.0;
      for (const auto& x0 : c.initial_points) {
        const double err = ssfd::check_gradients(c.problem, x0);
        worst = std::max(worst, err);
        std::cout << c.problem.name() << " at x0: max relative gradient error " << err << "\n";
      }
      return worst <= 1e-5 ? 0 : 1;
    }
  } catch (const ssfd::SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
