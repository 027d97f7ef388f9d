#ifndef SSFD_BENCH_HPP
#define SSFD_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssfd/params.hpp"
#include "ssfd/problems.hpp"

namespace ssfd {

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_format(const std::string& name);

/// One benchmark run request: either a single problem (optionally with an
/// overridden start) or a whole suite.
struct RunConfig {
  std::string problem;  // single case name; empty when a suite is selected
  std::string suite;    // "hs", "svanberg", "toy" or "all"
  std::optional<Vector> x0_override;
  SolverParams params;
  OutputFormat format = OutputFormat::Markdown;
  bool strict = false;
  std::string out_path;  // empty writes to stdout
};

struct ResultRow {
  std::string prob;
  int n = 0;
  int m = 0;
  Vector x0;
  int nio = 0;
  int nii = 0;
  int ni = 0;
  long nf0 = 0;
  long nf = 0;
  double fv = 0.0;
  double cpu_seconds = 0.0;
  int n_cycle1 = 0;
  int n_cycle2 = 0;
  std::string status;
};

/// Resolve the configured cases. Suite "hs" yields one case per problem;
/// rows are produced per (case, initial point).
std::vector<BenchmarkCase> resolve_cases(const RunConfig& cfg);

/// Solve every (case, initial point) pair sequentially, in input order.
std::vector<ResultRow> run(const RunConfig& cfg);

/// Reference objective value in the 7-digit scientific style used by the
/// result tables, e.g. -3.0000000E+01.
std::string format_fv(double fv);

/// Render rows. Markdown uses the column order
/// Prob | n/m | Initial point | NIO | NII | NF0 | NF | FV | CPU; json emits
/// an array of snake_case objects; csv a header plus one line per row.
/// Throws ConfigError on empty input.
std::string emit_table(const std::vector<ResultRow>& rows, OutputFormat format);

/// Inverse of emit_table(Json); used by the round-trip checks.
std::vector<ResultRow> parse_rows_json(const std::string& text);

struct RegressionOutcome {
  bool pass = false;
  int checked = 0;
  int failed = 0;
  std::string summary;  // per-row verdicts plus a cycle-count recap
};

/// Gate rows against the benchmark reference values: any non-KktPoint status
/// fails, as does |fv - expected| beyond the case tolerance.
RegressionOutcome regression_check(const std::vector<ResultRow>& rows,
                                   const std::vector<BenchmarkCase>& cases);

/// Flat key=value parameter file ('#' starts a comment). Unknown keys are
/// rejected.
SolverParams load_params_file(const std::string& path);
void apply_param(SolverParams& p, const std::string& key, const std::string& value);

/// JSON descriptor of a case: name, n, m, x0 list, expected_fv.
std::string case_description_json(const BenchmarkCase& c);

}  // namespace ssfd

#endif  // SSFD_BENCH_HPP
