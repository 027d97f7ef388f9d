#include "ssfd/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ssfd/errors.hpp"
#include "ssfd/solver.hpp"

namespace ssfd {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string format_x0(const Vector& x0) {
  // Compact runs of equal entries for wide vectors.
  std::ostringstream os;
  os << "(";
  if (x0.size() > 4 && std::all_of(x0.begin(), x0.end(), [&](double v) { return v == x0[0]; })) {
    os << x0[0] << ",...," << x0[0];
  } else {
    for (size_t i = 0; i < x0.size(); ++i) os << (i ? "," : "") << x0[i];
  }
  os << ")";
  return os.str();
}

std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "markdown") return OutputFormat::Markdown;
  throw ConfigError("unknown output format '" + name + "'");
}

std::vector<BenchmarkCase> resolve_cases(const RunConfig& cfg) {
  if (!cfg.problem.empty() && !cfg.suite.empty())
    throw ConfigError("select either a problem or a suite, not both");
  std::vector<BenchmarkCase> cases;
  if (!cfg.problem.empty()) {
    cases.push_back(find_case(cfg.problem));
  } else if (cfg.suite == "hs") {
    cases = hs_suite();
  } else if (cfg.suite == "toy") {
    cases = toy_suite();
  } else if (cfg.suite == "svanberg") {
    for (int n : svanberg_suite_dims()) cases.push_back(svanberg(n));
  } else if (cfg.suite == "all") {
    cases = toy_suite();
    for (auto& c : hs_suite()) cases.push_back(std::move(c));
    for (int n : svanberg_suite_dims()) cases.push_back(svanberg(n));
  } else if (cfg.suite.empty()) {
    throw ConfigError("no problem or suite selected");
  } else {
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  }
  return cases;
}

std::vector<ResultRow> run(const RunConfig& cfg) {
  cfg.params.validate();
  std::vector<ResultRow> rows;
  for (const BenchmarkCase& c : resolve_cases(cfg)) {
    std::vector<Vector> starts = c.initial_points;
    if (cfg.x0_override) {
      if (int(cfg.x0_override->size()) != c.problem.dim())
        throw ConfigError("x0 override has dimension " +
                          std::to_string(cfg.x0_override->size()) + ", problem needs " +
                          std::to_string(c.problem.dim()));
      starts = {*cfg.x0_override};
    }
    for (const Vector& x0 : starts) {
      SolveReport rep = solve(c.problem, x0, cfg.params);
      ResultRow r;
      r.prob = c.problem.name();
      r.n = c.problem.dim();
      r.m = c.problem.num_constraints();
      r.x0 = x0;
      r.nio = rep.nio;
      r.nii = rep.nii;
      r.ni = rep.ni;
      r.nf0 = rep.nf0;
      r.nf = rep.nf;
      r.fv = rep.fv;
      r.cpu_seconds = rep.wall_time_seconds;
      r.n_cycle1 = rep.n_cycle1;
      r.n_cycle2 = rep.n_cycle2;
      r.status = to_string(rep.status);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::string format_fv(double fv) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7E", fv);
  return buf;
}

std::string emit_table(const std::vector<ResultRow>& rows, OutputFormat format) {
  if (rows.empty()) throw ConfigError("no results");
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Markdown: {
      os << "| Prob | n/m | Initial point | NIO | NII | NF0 | NF | FV | CPU |\n";
      os << "|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& r : rows) {
        os << "| " << r.prob << " | " << r.n << "/" << r.m << " | " << format_x0(r.x0) << " | "
           << r.nio << " | " << r.nii << " | " << r.nf0 << " | " << r.nf << " | "
           << format_fv(r.fv) << " | ";
        char cpu[32];
        std::snprintf(cpu, sizeof cpu, "%.3f", r.cpu_seconds);
        os << cpu;
        if (r.status != "KktPoint") os << " (" << r.status << ")";
        os << " |\n";
      }
      break;
    }
    case OutputFormat::Csv: {
      os << "prob,n,m,x0,nio,nii,ni,nf0,nf,fv,cpu_seconds,n_cycle1,n_cycle2,status\n";
      for (const auto& r : rows) {
        os << r.prob << "," << r.n << "," << r.m << ",\"";
        for (size_t i = 0; i < r.x0.size(); ++i) os << (i ? ";" : "") << format_full(r.x0[i]);
        os << "\"," << r.nio << "," << r.nii << "," << r.ni << "," << r.nf0 << "," << r.nf << ","
           << format_full(r.fv) << "," << format_full(r.cpu_seconds) << "," << r.n_cycle1 << ","
           << r.n_cycle2 << "," << r.status << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json o;
        o["prob"] = r.prob;
        o["n"] = r.n;
        o["m"] = r.m;
        o["x0"] = r.x0;
        o["nio"] = r.nio;
        o["nii"] = r.nii;
        o["ni"] = r.ni;
        o["nf0"] = r.nf0;
        o["nf"] = r.nf;
        o["fv"] = r.fv;
        o["cpu_seconds"] = r.cpu_seconds;
        o["n_cycle1"] = r.n_cycle1;
        o["n_cycle2"] = r.n_cycle2;
        o["status"] = r.status;
        arr.push_back(std::move(o));
      }
      os << arr.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::vector<ResultRow> parse_rows_json(const std::string& text) {
  ordered_json arr = ordered_json::parse(text);
  std::vector<ResultRow> rows;
  for (const auto& o : arr) {
    ResultRow r;
    r.prob = o.at("prob").get<std::string>();
    r.n = o.at("n").get<int>();
    r.m = o.at("m").get<int>();
    r.x0 = o.at("x0").get<Vector>();
    r.nio = o.at("nio").get<int>();
    r.nii = o.at("nii").get<int>();
    r.ni = o.at("ni").get<int>();
    r.nf0 = o.at("nf0").get<long>();
    r.nf = o.at("nf").get<long>();
    r.fv = o.at("fv").get<double>();
    r.cpu_seconds = o.at("cpu_seconds").get<double>();
    r.n_cycle1 = o.at("n_cycle1").get<int>();
    r.n_cycle2 = o.at("n_cycle2").get<int>();
    r.status = o.at("status").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

RegressionOutcome regression_check(const std::vector<ResultRow>& rows,
                                   const std::vector<BenchmarkCase>& cases) {
  RegressionOutcome out;
  std::ostringstream os;
  long cycle1 = 0, cycle2 = 0;
  for (const auto& r : rows) {
    const BenchmarkCase* c = nullptr;
    for (const auto& cand : cases)
      if (cand.problem.name() == r.prob) {
        c = &cand;
        break;
      }
    if (!c) throw ConfigError("regression_check: no case named '" + r.prob + "'");
    ++out.checked;
    cycle1 += r.n_cycle1;
    cycle2 += r.n_cycle2;
    std::string verdict = "ok";
    if (r.status != "KktPoint") {
      verdict = "FAIL status=" + r.status;
    } else if (c->expected_fv) {
      const double delta = std::abs(r.fv - *c->expected_fv);
      if (delta > c->fv_tolerance) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "FAIL fv=%s expected=%s delta=%.3e",
                      format_fv(r.fv).c_str(), format_fv(*c->expected_fv).c_str(), delta);
        verdict = buf;
      }
    }
    if (verdict != "ok") ++out.failed;
    os << r.prob << " x0=" << format_x0(r.x0) << " " << verdict << "\n";
  }
  os << "cycle totals: I=" << cycle1 << " II=" << cycle2
     << (cycle1 > cycle2 ? " (cycle I dominates)" : "") << "\n";
  out.pass = out.failed == 0;
  os << (out.pass ? "PASS" : "FAIL") << " " << (out.checked - out.failed) << "/" << out.checked
     << " rows within tolerance\n";
  out.summary = os.str();
  return out;
}

void apply_param(SolverParams& p, const std::string& key, const std::string& value) {
  auto as_double = [&] {
    try {
      size_t pos = 0;
      const double v = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("bad numeric value '" + value + "' for parameter " + key);
    }
  };
  auto as_bool = [&] {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("bad boolean value '" + value + "' for parameter " + key);
  };
  if (key == "gamma") p.gamma = as_double();
  else if (key == "eta") p.eta = as_double();
  else if (key == "theta") p.theta = as_double();
  else if (key == "sigma") p.sigma = as_double();
  else if (key == "varrho") p.varrho = as_double();
  else if (key == "xi") p.xi = as_double();
  else if (key == "zeta") p.zeta = as_double();
  else if (key == "alpha") p.alpha = as_double();
  else if (key == "rho") p.rho = as_double();
  else if (key == "delta") p.delta = as_double();
  else if (key == "tau") p.tau = as_double();
  else if (key == "ls_epsilon") p.ls_epsilon = as_double();
  else if (key == "tol_d0") p.tol_d0 = as_double();
  else if (key == "max_iter") p.max_iter = int(as_double());
  else if (key == "max_step5_backtracks") p.max_step5_backtracks = int(as_double());
  else if (key == "warm_start_qp") p.warm_start_qp = as_bool();
  else if (key == "check_invariants") p.check_invariants = as_bool();
  else throw ConfigError("unknown parameter key '" + key + "'");
}

SolverParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open params file '" + path + "'");
  SolverParams p;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_param(p, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  p.validate();
  return p;
}

std::string case_description_json(const BenchmarkCase& c) {
  ordered_json o;
  o["name"] = c.problem.name();
  o["n"] = c.problem.dim();
  o["m"] = c.problem.num_constraints();
  o["x0"] = c.initial_points;
  if (c.expected_fv)
    o["expected_fv"] = *c.expected_fv;
  else
    o["expected_fv"] = nullptr;
  return o.dump(2);
}

}  // namespace ssfd
