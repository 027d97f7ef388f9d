#ifndef SSFD_PROBLEMS_HPP
#define SSFD_PROBLEMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssfd/problem.hpp"

namespace ssfd {

/// A benchmark problem with its reference initial points and target value.
struct BenchmarkCase {
  Problem problem;
  std::vector<Vector> initial_points;
  std::optional<double> expected_fv;
  double fv_tolerance = 1e-4;
  std::string source_table;
};

/// Hand-verifiable problems for unit tests: analytic optima, one case with
/// an infeasible default start.
std::vector<BenchmarkCase> toy_suite();

/// The small-scale benchmark set: HS 012, 029, 031, 033, 034, 035, 043, 044,
/// 066, 076, 100, 113 from the Hock-Schittkowski collection and problem 264
/// from the Schittkowski (1987) collection, bounds encoded as inequality
/// constraints. hs033 carries two initial points; 14 (problem, start) pairs
/// in total.
std::vector<BenchmarkCase> hs_suite();

/// The n-variable chain benchmark in the Svanberg structural-design style:
/// n smooth nonlinear constraints plus 2n bound constraints (m = 3n),
/// feasible at x = 0. Reference objective values exist for
/// n in {10,20,30,40,50,80,100,150,200,250}; with strict=true other n throw
/// ConfigError.
BenchmarkCase svanberg(int n, bool strict = false);

/// Default dimensions run by the svanberg suite.
std::vector<int> svanberg_suite_dims();

/// Resolve a case by name: "toy-*", "hs*", "s264", or "svanberg-N".
BenchmarkCase find_case(const std::string& name);

/// All names known to find_case (svanberg listed for tabulated dimensions).
std::vector<std::string> known_case_names();

}  // namespace ssfd

#endif  // SSFD_PROBLEMS_HPP
