#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ssfd/bench.hpp"
#include "ssfd/errors.hpp"

using namespace ssfd;

namespace {

ResultRow sample_row() {
  ResultRow r;
  r.prob = "hs012";
  r.n = 2;
  r.m = 1;
  r.x0 = {6.0, 6.0};
  r.nio = 17;
  r.nii = 3;
  r.ni = 20;
  r.nf0 = 21;
  r.nf = 41;
  r.fv = -30.0;
  r.cpu_seconds = 0.001;
  r.n_cycle1 = 18;
  r.n_cycle2 = 2;
  r.status = "KktPoint";
  return r;
}

}  // namespace

TEST_CASE("format_fv uses 7-digit scientific notation") {
  CHECK(format_fv(-30.0) == "-3.0000000E+01");
  CHECK(format_fv(0.11111111) == "1.1111111E-01");
  CHECK(format_fv(682.56637) == "6.8256637E+02");
}

TEST_CASE("markdown table carries the reference column order and FV style") {
  std::string text = emit_table({sample_row()}, OutputFormat::Markdown);
  CHECK(text.find("| Prob | n/m | Initial point | NIO | NII | NF0 | NF | FV | CPU |") !=
        std::string::npos);
  CHECK(text.find("-3.0000000E+01") != std::string::npos);
  CHECK(text.find("| 2/1 |") != std::string::npos);
}

TEST_CASE("emit_table rejects empty input") {
  CHECK_THROWS_AS(emit_table({}, OutputFormat::Json), ConfigError);
}

TEST_CASE("json rows round-trip field by field") {
  RunConfig cfg;
  cfg.suite = "toy";
  std::vector<ResultRow> rows = run(cfg);
  REQUIRE(!rows.empty());
  std::vector<ResultRow> back = parse_rows_json(emit_table(rows, OutputFormat::Json));
  REQUIRE(back.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].prob == rows[i].prob);
    CHECK(back[i].n == rows[i].n);
    CHECK(back[i].m == rows[i].m);
    CHECK(back[i].x0 == rows[i].x0);
    CHECK(back[i].nio == rows[i].nio);
    CHECK(back[i].nii == rows[i].nii);
    CHECK(back[i].ni == rows[i].ni);
    CHECK(back[i].nf0 == rows[i].nf0);
    CHECK(back[i].nf == rows[i].nf);
    CHECK(back[i].fv == rows[i].fv);
    CHECK(back[i].cpu_seconds == rows[i].cpu_seconds);
    CHECK(back[i].n_cycle1 == rows[i].n_cycle1);
    CHECK(back[i].n_cycle2 == rows[i].n_cycle2);
    CHECK(back[i].status == rows[i].status);
    CHECK(back[i].ni == back[i].nio + back[i].nii);
  }
}

TEST_CASE("run --suite hs produces one row per (problem, start): 14 rows") {
  RunConfig cfg;
  cfg.suite = "hs";
  std::vector<ResultRow> rows = run(cfg);
  CHECK(rows.size() == 14);
}

TEST_CASE("run: single problem with x0 override") {
  RunConfig cfg;
  cfg.problem = "toy-quad1";
  std::vector<ResultRow> rows = run(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].fv <= 1e-8);
  CHECK(rows[0].status == "KktPoint");

  cfg.x0_override = Vector{2.5};
  rows = run(cfg);
  CHECK(rows[0].x0 == Vector{2.5});

  cfg.x0_override = Vector{1.0, 2.0};
  CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("run configuration validation") {
  RunConfig both;
  both.problem = "toy-quad1";
  both.suite = "hs";
  CHECK_THROWS_AS(resolve_cases(both), ConfigError);

  RunConfig none;
  CHECK_THROWS_AS(resolve_cases(none), ConfigError);

  RunConfig bad;
  bad.suite = "nope";
  CHECK_THROWS_AS(resolve_cases(bad), ConfigError);
}

TEST_CASE("regression_check verdicts") {
  RunConfig cfg;
  cfg.suite = "toy";
  std::vector<ResultRow> rows = run(cfg);
  auto cases = resolve_cases(cfg);

  auto ok = regression_check(rows, cases);
  CHECK(ok.pass);
  CHECK(ok.failed == 0);
  CHECK(ok.summary.find("PASS") != std::string::npos);
  CHECK(ok.summary.find("cycle totals") != std::string::npos);

  auto rows_bad_fv = rows;
  rows_bad_fv[0].fv += 0.2;
  auto bad = regression_check(rows_bad_fv, cases);
  CHECK_FALSE(bad.pass);
  CHECK(bad.summary.find("delta") != std::string::npos);

  auto rows_bad_status = rows;
  rows_bad_status[1].status = "LineSearchFailure";
  auto bad2 = regression_check(rows_bad_status, cases);
  CHECK_FALSE(bad2.pass);
  CHECK(bad2.summary.find("FAIL status=LineSearchFailure") != std::string::npos);
}

TEST_CASE("params file parsing") {
  const char* path = "ssfd_test_params.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "theta = 0.45\n";
    out << "max_iter=123   # trailing comment\n";
    out << "warm_start_qp = false\n";
  }
  SolverParams p = load_params_file(path);
  CHECK(p.theta == 0.45);
  CHECK(p.max_iter == 123);
  CHECK_FALSE(p.warm_start_qp);
  std::remove(path);

  SolverParams q;
  CHECK_THROWS_AS(apply_param(q, "nope", "1"), ConfigError);
  CHECK_THROWS_AS(apply_param(q, "theta", "abc"), ConfigError);
  CHECK_THROWS_AS(apply_param(q, "warm_start_qp", "maybe"), ConfigError);
}

TEST_CASE("params file with out-of-range value fails validation") {
  const char* path = "ssfd_test_params2.tmp";
  {
    std::ofstream out(path);
    out << "alpha=0.7\n";
  }
  CHECK_THROWS_AS(load_params_file(path), ConfigError);
  std::remove(path);
}

TEST_CASE("case_description_json carries the harness schema") {
  std::string text = case_description_json(find_case("svanberg-10"));
  CHECK(text.find("\"name\": \"svanberg-10\"") != std::string::npos);
  CHECK(text.find("\"n\": 10") != std::string::npos);
  CHECK(text.find("\"m\": 30") != std::string::npos);
  CHECK(text.find("\"expected_fv\": 15.731517") != std::string::npos);
  CHECK(text.find("\"x0\"") != std::string::npos);
}

TEST_CASE("parse_format") {
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("markdown") == OutputFormat::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}
