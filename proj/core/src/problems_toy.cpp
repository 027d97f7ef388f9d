#include <cmath>

#include "ssfd/problems.hpp"

namespace ssfd {

std::vector<BenchmarkCase> toy_suite() {
  std::vector<BenchmarkCase> cases;

  // 1-D quadratic, constraint inactive at the optimum.
  cases.push_back(BenchmarkCase{
      Problem("toy-quad1", 1, [](const Vector& x) { return x[0] * x[0]; },
              [](const Vector& x) { return Vector{2.0 * x[0]}; },
              {[](const Vector& x) { return x[0] - 10.0; }},
              {[](const Vector&) { return Vector{1.0}; }}, Vector{5.0}, 0.0),
      {{5.0}},
      0.0,
      1e-8,
      "toy"});

  // 2-D quadratic with the single linear constraint active at the optimum:
  // x* = (1.5, 0.5), lambda* = 1, f* = 0.5. Default start is infeasible.
  cases.push_back(BenchmarkCase{
      Problem("toy-quad2", 2,
              [](const Vector& x) {
                const double a = x[0] - 2.0, b = x[1] - 1.0;
                return a * a + b * b;
              },
              [](const Vector& x) {
                return Vector{2.0 * (x[0] - 2.0), 2.0 * (x[1] - 1.0)};
              },
              {[](const Vector& x) { return x[0] + x[1] - 2.0; }},
              {[](const Vector&) { return Vector{1.0, 1.0}; }}, Vector{3.0, 3.0}, 0.5),
      {{3.0, 3.0}},
      0.5,
      1e-6,
      "toy"});

  // 1-D linear program started infeasible with phi = 5.
  cases.push_back(BenchmarkCase{
      Problem("toy-lin1", 1, [](const Vector& x) { return x[0]; },
              [](const Vector&) { return Vector{1.0}; },
              {[](const Vector& x) { return -x[0]; }},
              {[](const Vector&) { return Vector{-1.0}; }}, Vector{-5.0}, 0.0),
      {{-5.0}},
      0.0,
      1e-6,
      "toy"});

  // Linear objective over a disc; optimum at (1,1) on the boundary.
  cases.push_back(BenchmarkCase{
      Problem("toy-circle", 2, [](const Vector& x) { return -x[0] - x[1]; },
              [](const Vector&) { return Vector{-1.0, -1.0}; },
              {[](const Vector& x) { return x[0] * x[0] + x[1] * x[1] - 2.0; }},
              {[](const Vector& x) { return Vector{2.0 * x[0], 2.0 * x[1]}; }},
              Vector{0.0, 0.0}, -2.0),
      {{0.0, 0.0}},
      -2.0,
      1e-6,
      "toy"});

  // Quadratic over a box, optimum in the corner x = (0,0) with one bound
  // active (lambda = 2).
  cases.push_back(BenchmarkCase{
      Problem("toy-box", 2,
              [](const Vector& x) {
                const double a = x[0] + 1.0;
                return a * a + x[1] * x[1];
              },
              [](const Vector& x) { return Vector{2.0 * (x[0] + 1.0), 2.0 * x[1]}; },
              {[](const Vector& x) { return -x[0]; },
               [](const Vector& x) { return x[0] - 2.0; },
               [](const Vector& x) { return -x[1] - 1.0; },
               [](const Vector& x) { return x[1] - 1.0; }},
              {[](const Vector&) { return Vector{-1.0, 0.0}; },
               [](const Vector&) { return Vector{1.0, 0.0}; },
               [](const Vector&) { return Vector{0.0, -1.0}; },
               [](const Vector&) { return Vector{0.0, 1.0}; }},
              Vector{1.0, 0.5}, 1.0),
      {{1.0, 0.5}},
      1.0,
      1e-6,
      "toy"});

  // 1-D with the constraint active at the optimum x* = 1.
  cases.push_back(BenchmarkCase{
      Problem("toy-active", 1, [](const Vector& x) { return -x[0]; },
              [](const Vector&) { return Vector{-1.0}; },
              {[](const Vector& x) { return x[0] - 1.0; }},
              {[](const Vector&) { return Vector{1.0}; }}, Vector{0.0}, -1.0),
      {{0.0}},
      -1.0,
      1e-6,
      "toy"});

  return cases;
}

}  // namespace ssfd
