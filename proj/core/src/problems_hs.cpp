#include <cmath>

#include "ssfd/problems.hpp"

// Small-scale benchmark problems transcribed from the Hock-Schittkowski
// collection ("Test Examples for Nonlinear Programming Codes", 1981) and the
// Schittkowski continuation ("More Test Examples ...", 1987). Bounds are
// encoded as ordinary inequality constraints, appended after the general
// constraints as (lower, upper) pairs per variable.

namespace ssfd {

namespace {

using Cons = std::vector<Problem::ScalarFn>;
using Grads = std::vector<Problem::VectorFn>;

void bound_lower(Cons& c, Grads& g, int i, double lo, int n) {
  c.push_back([i, lo](const Vector& x) { return lo - x[i]; });
  g.push_back([i, n](const Vector&) {
    Vector v(n, 0.0);
    v[i] = -1.0;
    return v;
  });
}

void bound_upper(Cons& c, Grads& g, int i, double up, int n) {
  c.push_back([i, up](const Vector& x) { return x[i] - up; });
  g.push_back([i, n](const Vector&) {
    Vector v(n, 0.0);
    v[i] = 1.0;
    return v;
  });
}

double tol_for(double fv) { return std::max(1e-4, 1e-4 * std::abs(fv)); }

BenchmarkCase make(Problem p, std::vector<Vector> x0s, double fv, std::string table) {
  return BenchmarkCase{std::move(p), std::move(x0s), fv, tol_for(fv), std::move(table)};
}

// HS 12: quadratic objective, one quadratic constraint.
BenchmarkCase hs012() {
  Problem p(
      "hs012", 2,
      [](const Vector& x) {
        return 0.5 * x[0] * x[0] + x[1] * x[1] - x[0] * x[1] - 7.0 * x[0] - 7.0 * x[1];
      },
      [](const Vector& x) { return Vector{x[0] - x[1] - 7.0, 2.0 * x[1] - x[0] - 7.0}; },
      {[](const Vector& x) { return 4.0 * x[0] * x[0] + x[1] * x[1] - 25.0; }},
      {[](const Vector& x) { return Vector{8.0 * x[0], 2.0 * x[1]}; }}, Vector{6.0, 6.0}, -30.0);
  return make(std::move(p), {{6.0, 6.0}}, -30.0, "1");
}

// HS 29.
BenchmarkCase hs029() {
  Problem p(
      "hs029", 3, [](const Vector& x) { return -x[0] * x[1] * x[2]; },
      [](const Vector& x) { return Vector{-x[1] * x[2], -x[0] * x[2], -x[0] * x[1]}; },
      {[](const Vector& x) {
        return x[0] * x[0] + 2.0 * x[1] * x[1] + 4.0 * x[2] * x[2] - 48.0;
      }},
      {[](const Vector& x) { return Vector{2.0 * x[0], 4.0 * x[1], 8.0 * x[2]}; }},
      Vector{-4.0, -4.0, -4.0}, -22.627417);
  return make(std::move(p), {{-4.0, -4.0, -4.0}}, -22.627417, "1");
}

// HS 31: one hyperbolic constraint plus box bounds.
BenchmarkCase hs031() {
  Cons c{[](const Vector& x) { return 1.0 - x[0] * x[1]; }};
  Grads g{[](const Vector& x) { return Vector{-x[1], -x[0], 0.0}; }};
  bound_lower(c, g, 0, -10.0, 3);
  bound_upper(c, g, 0, 10.0, 3);
  bound_lower(c, g, 1, 1.0, 3);
  bound_upper(c, g, 1, 10.0, 3);
  bound_lower(c, g, 2, -10.0, 3);
  bound_upper(c, g, 2, 1.0, 3);
  Problem p(
      "hs031", 3,
      [](const Vector& x) {
        return 9.0 * x[0] * x[0] + x[1] * x[1] + 9.0 * x[2] * x[2];
      },
      [](const Vector& x) { return Vector{18.0 * x[0], 2.0 * x[1], 18.0 * x[2]}; }, std::move(c),
      std::move(g), Vector{2.0, 4.0, 7.0}, 6.0);
  return make(std::move(p), {{2.0, 4.0, 7.0}}, 6.0, "1");
}

// HS 33: two quadratic constraints plus bounds; two reference starts.
BenchmarkCase hs033() {
  Cons c{[](const Vector& x) { return x[0] * x[0] + x[1] * x[1] - x[2] * x[2]; },
         [](const Vector& x) {
           return 4.0 - x[0] * x[0] - x[1] * x[1] - x[2] * x[2];
         }};
  Grads g{[](const Vector& x) { return Vector{2.0 * x[0], 2.0 * x[1], -2.0 * x[2]}; },
          [](const Vector& x) { return Vector{-2.0 * x[0], -2.0 * x[1], -2.0 * x[2]}; }};
  bound_lower(c, g, 0, 0.0, 3);
  bound_lower(c, g, 1, 0.0, 3);
  bound_lower(c, g, 2, 0.0, 3);
  bound_upper(c, g, 2, 5.0, 3);
  Problem p(
      "hs033", 3,
      [](const Vector& x) {
        return (x[0] - 1.0) * (x[0] - 2.0) * (x[0] - 3.0) + x[2];
      },
      [](const Vector& x) {
        return Vector{3.0 * x[0] * x[0] - 12.0 * x[0] + 11.0, 0.0, 1.0};
      },
      std::move(c), std::move(g), Vector{2.0, 4.0, 6.0}, -4.5857864);
  return make(std::move(p), {{2.0, 4.0, 6.0}, {1.0, 4.0, 6.0}}, -4.5857864, "1");
}

// HS 34: exponential chain constraints plus bounds.
BenchmarkCase hs034() {
  Cons c{[](const Vector& x) { return std::exp(x[0]) - x[1]; },
         [](const Vector& x) { return std::exp(x[1]) - x[2]; }};
  Grads g{[](const Vector& x) { return Vector{std::exp(x[0]), -1.0, 0.0}; },
          [](const Vector& x) { return Vector{0.0, std::exp(x[1]), -1.0}; }};
  bound_lower(c, g, 0, 0.0, 3);
  bound_upper(c, g, 0, 100.0, 3);
  bound_lower(c, g, 1, 0.0, 3);
  bound_upper(c, g, 1, 100.0, 3);
  bound_lower(c, g, 2, 0.0, 3);
  bound_upper(c, g, 2, 10.0, 3);
  Problem p("hs034", 3, [](const Vector& x) { return -x[0]; },
            [](const Vector&) { return Vector{-1.0, 0.0, 0.0}; }, std::move(c), std::move(g),
            Vector{2.0, 2.0, 2.0}, -0.83403245);
  return make(std::move(p), {{2.0, 2.0, 2.0}}, -0.83403245, "1");
}

// HS 35 (Beale).
BenchmarkCase hs035() {
  Cons c{[](const Vector& x) { return x[0] + x[1] + 2.0 * x[2] - 3.0; }};
  Grads g{[](const Vector&) { return Vector{1.0, 1.0, 2.0}; }};
  bound_lower(c, g, 0, 0.0, 3);
  bound_lower(c, g, 1, 0.0, 3);
  bound_lower(c, g, 2, 0.0, 3);
  Problem p(
      "hs035", 3,
      [](const Vector& x) {
        return 9.0 - 8.0 * x[0] - 6.0 * x[1] - 4.0 * x[2] + 2.0 * x[0] * x[0] +
               2.0 * x[1] * x[1] + x[2] * x[2] + 2.0 * x[0] * x[1] + 2.0 * x[0] * x[2];
      },
      [](const Vector& x) {
        return Vector{-8.0 + 4.0 * x[0] + 2.0 * x[1] + 2.0 * x[2],
                      -6.0 + 4.0 * x[1] + 2.0 * x[0], -4.0 + 2.0 * x[2] + 2.0 * x[0]};
      },
      std::move(c), std::move(g), Vector{1.0, 2.0, 3.0}, 0.11111111);
  return make(std::move(p), {{1.0, 2.0, 3.0}}, 0.11111111, "1");
}

double rosen_suzuki_f(const Vector& x) {
  return x[0] * x[0] + x[1] * x[1] + 2.0 * x[2] * x[2] + x[3] * x[3] - 5.0 * x[0] - 5.0 * x[1] -
         21.0 * x[2] + 7.0 * x[3];
}

Vector rosen_suzuki_g(const Vector& x) {
  return Vector{2.0 * x[0] - 5.0, 2.0 * x[1] - 5.0, 4.0 * x[2] - 21.0, 2.0 * x[3] + 7.0};
}

Cons rosen_suzuki_cons() {
  return {[](const Vector& x) {
            return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[0] - x[1] + x[2] -
                   x[3] - 8.0;
          },
          [](const Vector& x) {
            return x[0] * x[0] + 2.0 * x[1] * x[1] + x[2] * x[2] + 2.0 * x[3] * x[3] - x[0] -
                   x[3] - 10.0;
          },
          [](const Vector& x) {
            return 2.0 * x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + 2.0 * x[0] - x[1] - x[3] - 5.0;
          }};
}

Grads rosen_suzuki_grads() {
  return {[](const Vector& x) {
            return Vector{2.0 * x[0] + 1.0, 2.0 * x[1] - 1.0, 2.0 * x[2] + 1.0, 2.0 * x[3] - 1.0};
          },
          [](const Vector& x) {
            return Vector{2.0 * x[0] - 1.0, 4.0 * x[1], 2.0 * x[2], 4.0 * x[3] - 1.0};
          },
          [](const Vector& x) {
            return Vector{4.0 * x[0] + 2.0, 2.0 * x[1] - 1.0, 2.0 * x[2], -1.0};
          }};
}

// HS 43 (Rosen-Suzuki).
BenchmarkCase hs043() {
  Problem p("hs043", 4, rosen_suzuki_f, rosen_suzuki_g, rosen_suzuki_cons(), rosen_suzuki_grads(),
            Vector{-10.0, 2.0, -8.0, 5.0}, -44.0);
  return make(std::move(p), {{-10.0, 2.0, -8.0, 5.0}}, -44.0, "1");
}

// HS 44: bilinear objective over linear constraints plus x >= 0.
BenchmarkCase hs044() {
  Cons c{[](const Vector& x) { return x[0] + 2.0 * x[1] - 8.0; },
         [](const Vector& x) { return 4.0 * x[0] + x[1] - 12.0; },
         [](const Vector& x) { return 3.0 * x[0] + 4.0 * x[1] - 12.0; },
         [](const Vector& x) { return 2.0 * x[2] + x[3] - 8.0; },
         [](const Vector& x) { return x[2] + 2.0 * x[3] - 8.0; },
         [](const Vector& x) { return x[2] + x[3] - 5.0; }};
  Grads g{[](const Vector&) { return Vector{1.0, 2.0, 0.0, 0.0}; },
          [](const Vector&) { return Vector{4.0, 1.0, 0.0, 0.0}; },
          [](const Vector&) { return Vector{3.0, 4.0, 0.0, 0.0}; },
          [](const Vector&) { return Vector{0.0, 0.0, 2.0, 1.0}; },
          [](const Vector&) { return Vector{0.0, 0.0, 1.0, 2.0}; },
          [](const Vector&) { return Vector{0.0, 0.0, 1.0, 1.0}; }};
  for (int i = 0; i < 4; ++i) bound_lower(c, g, i, 0.0, 4);
  Problem p(
      "hs044", 4,
      [](const Vector& x) {
        return x[0] - x[1] - x[2] - x[0] * x[2] + x[0] * x[3] + x[1] * x[2] - x[1] * x[3];
      },
      [](const Vector& x) {
        return Vector{1.0 - x[2] + x[3], -1.0 + x[2] - x[3], -1.0 - x[0] + x[1], x[0] - x[1]};
      },
      std::move(c), std::move(g), Vector{-20.0, -20.0, -20.0, -20.0}, -15.0);
  return make(std::move(p), {{-20.0, -20.0, -20.0, -20.0}}, -15.0, "1");
}

// HS 66: same constraint structure as HS 34, different objective.
BenchmarkCase hs066() {
  Cons c{[](const Vector& x) { return std::exp(x[0]) - x[1]; },
         [](const Vector& x) { return std::exp(x[1]) - x[2]; }};
  Grads g{[](const Vector& x) { return Vector{std::exp(x[0]), -1.0, 0.0}; },
          [](const Vector& x) { return Vector{0.0, std::exp(x[1]), -1.0}; }};
  bound_lower(c, g, 0, 0.0, 3);
  bound_upper(c, g, 0, 100.0, 3);
  bound_lower(c, g, 1, 0.0, 3);
  bound_upper(c, g, 1, 100.0, 3);
  bound_lower(c, g, 2, 0.0, 3);
  bound_upper(c, g, 2, 10.0, 3);
  Problem p("hs066", 3, [](const Vector& x) { return 0.2 * x[2] - 0.8 * x[0]; },
            [](const Vector&) { return Vector{-0.8, 0.0, 0.2}; }, std::move(c), std::move(g),
            Vector{0.0, 0.0, 100.0}, 0.51816327);
  return make(std::move(p), {{0.0, 0.0, 100.0}}, 0.51816327, "1");
}

// HS 76: convex quadratic over linear constraints plus x >= 0.
BenchmarkCase hs076() {
  Cons c{[](const Vector& x) { return x[0] + 2.0 * x[1] + x[2] + x[3] - 5.0; },
         [](const Vector& x) { return 3.0 * x[0] + x[1] + 2.0 * x[2] - x[3] - 4.0; },
         [](const Vector& x) { return 1.5 - x[1] - 4.0 * x[2]; }};
  Grads g{[](const Vector&) { return Vector{1.0, 2.0, 1.0, 1.0}; },
          [](const Vector&) { return Vector{3.0, 1.0, 2.0, -1.0}; },
          [](const Vector&) { return Vector{0.0, -1.0, -4.0, 0.0}; }};
  for (int i = 0; i < 4; ++i) bound_lower(c, g, i, 0.0, 4);
  Problem p(
      "hs076", 4,
      [](const Vector& x) {
        return x[0] * x[0] + 0.5 * x[1] * x[1] + x[2] * x[2] + 0.5 * x[3] * x[3] -
               x[0] * x[2] + x[2] * x[3] - x[0] - 3.0 * x[1] + x[2] - x[3];
      },
      [](const Vector& x) {
        return Vector{2.0 * x[0] - x[2] - 1.0, x[1] - 3.0, 2.0 * x[2] - x[0] + x[3] + 1.0,
                      x[3] + x[2] - 1.0};
      },
      std::move(c), std::move(g), Vector{1.0, 2.0, 3.0, 4.0}, -4.6818182);
  return make(std::move(p), {{1.0, 2.0, 3.0, 4.0}}, -4.6818182, "1");
}

// HS 100.
BenchmarkCase hs100() {
  Cons c{[](const Vector& x) {
           return 2.0 * x[0] * x[0] + 3.0 * std::pow(x[1], 4) + x[2] + 4.0 * x[3] * x[3] +
                  5.0 * x[4] - 127.0;
         },
         [](const Vector& x) {
           return 7.0 * x[0] + 3.0 * x[1] + 10.0 * x[2] * x[2] + x[3] - x[4] - 282.0;
         },
         [](const Vector& x) {
           return 23.0 * x[0] + x[1] * x[1] + 6.0 * x[5] * x[5] - 8.0 * x[6] - 196.0;
         },
         [](const Vector& x) {
           return 4.0 * x[0] * x[0] + x[1] * x[1] - 3.0 * x[0] * x[1] + 2.0 * x[2] * x[2] +
                  5.0 * x[5] - 11.0 * x[6];
         }};
  Grads g{[](const Vector& x) {
            return Vector{4.0 * x[0], 12.0 * std::pow(x[1], 3), 1.0, 8.0 * x[3], 5.0, 0.0, 0.0};
          },
          [](const Vector& x) { return Vector{7.0, 3.0, 20.0 * x[2], 1.0, -1.0, 0.0, 0.0}; },
          [](const Vector& x) {
            return Vector{23.0, 2.0 * x[1], 0.0, 0.0, 0.0, 12.0 * x[5], -8.0};
          },
          [](const Vector& x) {
            return Vector{8.0 * x[0] - 3.0 * x[1], 2.0 * x[1] - 3.0 * x[0], 4.0 * x[2], 0.0, 0.0,
                          5.0, -11.0};
          }};
  Problem p(
      "hs100", 7,
      [](const Vector& x) {
        return std::pow(x[0] - 10.0, 2) + 5.0 * std::pow(x[1] - 12.0, 2) + std::pow(x[2], 4) +
               3.0 * std::pow(x[3] - 11.0, 2) + 10.0 * std::pow(x[4], 6) + 7.0 * x[5] * x[5] +
               std::pow(x[6], 4) - 4.0 * x[5] * x[6] - 10.0 * x[5] - 8.0 * x[6];
      },
      [](const Vector& x) {
        return Vector{2.0 * (x[0] - 10.0),
                      10.0 * (x[1] - 12.0),
                      4.0 * std::pow(x[2], 3),
                      6.0 * (x[3] - 11.0),
                      60.0 * std::pow(x[4], 5),
                      14.0 * x[5] - 4.0 * x[6] - 10.0,
                      4.0 * std::pow(x[6], 3) - 4.0 * x[5] - 8.0};
      },
      std::move(c), std::move(g), Vector{0.0, 3.0, -3.0, 3.0, 0.0, 1.0, 0.0}, 682.56637);
  return make(std::move(p), {{0.0, 3.0, -3.0, 3.0, 0.0, 1.0, 0.0}}, 682.56637, "2");
}

// HS 113 (Wong).
BenchmarkCase hs113() {
  Cons c{
      [](const Vector& x) { return 4.0 * x[0] + 5.0 * x[1] - 3.0 * x[6] + 9.0 * x[7] - 105.0; },
      [](const Vector& x) { return 10.0 * x[0] - 8.0 * x[1] - 17.0 * x[6] + 2.0 * x[7]; },
      [](const Vector& x) { return -8.0 * x[0] + 2.0 * x[1] + 5.0 * x[8] - 2.0 * x[9] - 12.0; },
      [](const Vector& x) {
        return 3.0 * std::pow(x[0] - 2.0, 2) + 4.0 * std::pow(x[1] - 3.0, 2) +
               2.0 * x[2] * x[2] - 7.0 * x[3] - 120.0;
      },
      [](const Vector& x) {
        return 5.0 * x[0] * x[0] + 8.0 * x[1] + std::pow(x[2] - 6.0, 2) - 2.0 * x[3] - 40.0;
      },
      [](const Vector& x) {
        return x[0] * x[0] + 2.0 * std::pow(x[1] - 2.0, 2) - 2.0 * x[0] * x[1] + 14.0 * x[4] -
               6.0 * x[5];
      },
      [](const Vector& x) {
        return 0.5 * std::pow(x[0] - 8.0, 2) + 2.0 * std::pow(x[1] - 4.0, 2) +
               3.0 * x[4] * x[4] - x[5] - 30.0;
      },
      [](const Vector& x) {
        return -3.0 * x[0] + 6.0 * x[1] + 12.0 * std::pow(x[8] - 8.0, 2) - 7.0 * x[9];
      }};
  Grads g{
      [](const Vector&) { return Vector{4, 5, 0, 0, 0, 0, -3, 9, 0, 0}; },
      [](const Vector&) { return Vector{10, -8, 0, 0, 0, 0, -17, 2, 0, 0}; },
      [](const Vector&) { return Vector{-8, 2, 0, 0, 0, 0, 0, 0, 5, -2}; },
      [](const Vector& x) {
        return Vector{6.0 * (x[0] - 2.0), 8.0 * (x[1] - 3.0), 4.0 * x[2], -7.0, 0, 0, 0, 0, 0, 0};
      },
      [](const Vector& x) {
        return Vector{10.0 * x[0], 8.0, 2.0 * (x[2] - 6.0), -2.0, 0, 0, 0, 0, 0, 0};
      },
      [](const Vector& x) {
        return Vector{2.0 * x[0] - 2.0 * x[1], 4.0 * (x[1] - 2.0) - 2.0 * x[0], 0, 0, 14.0, -6.0,
                      0, 0, 0, 0};
      },
      [](const Vector& x) {
        return Vector{x[0] - 8.0, 4.0 * (x[1] - 4.0), 0, 0, 6.0 * x[4], -1.0, 0, 0, 0, 0};
      },
      [](const Vector& x) {
        return Vector{-3.0, 6.0, 0, 0, 0, 0, 0, 0, 24.0 * (x[8] - 8.0), -7.0};
      }};
  Problem p(
      "hs113", 10,
      [](const Vector& x) {
        return x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14.0 * x[0] - 16.0 * x[1] +
               std::pow(x[2] - 10.0, 2) + 4.0 * std::pow(x[3] - 5.0, 2) +
               std::pow(x[4] - 3.0, 2) + 2.0 * std::pow(x[5] - 1.0, 2) + 5.0 * x[6] * x[6] +
               7.0 * std::pow(x[7] - 11.0, 2) + 2.0 * std::pow(x[8] - 10.0, 2) +
               std::pow(x[9] - 7.0, 2) + 45.0;
      },
      [](const Vector& x) {
        return Vector{2.0 * x[0] + x[1] - 14.0, 2.0 * x[1] + x[0] - 16.0,
                      2.0 * (x[2] - 10.0),     8.0 * (x[3] - 5.0),
                      2.0 * (x[4] - 3.0),      4.0 * (x[5] - 1.0),
                      10.0 * x[6],             14.0 * (x[7] - 11.0),
                      4.0 * (x[8] - 10.0),     2.0 * (x[9] - 7.0)};
      },
      std::move(c), std::move(g), Vector{4.0, 10.0, 10.0, 2.0, 0.0, 11.0, 4.0, 0.0, 12.0, 10.0},
      24.306209);
  return make(std::move(p), {{4.0, 10.0, 10.0, 2.0, 0.0, 11.0, 4.0, 0.0, 12.0, 10.0}},
              24.306209, "2");
}

// Problem 264 from the Schittkowski (1987) collection (Rosen-Suzuki data).
BenchmarkCase s264() {
  Problem p("s264", 4, rosen_suzuki_f, rosen_suzuki_g, rosen_suzuki_cons(), rosen_suzuki_grads(),
            Vector{8.0, -5.0, 6.0, -4.0}, -43.987578);
  return make(std::move(p), {{8.0, -5.0, 6.0, -4.0}}, -43.987578, "2");
}

}  // namespace

std::vector<BenchmarkCase> hs_suite() {
  std::vector<BenchmarkCase> cases;
  cases.push_back(hs012());
  cases.push_back(hs029());
  cases.push_back(hs031());
  cases.push_back(hs033());
  cases.push_back(hs034());
  cases.push_back(hs035());
  cases.push_back(hs043());
  cases.push_back(hs044());
  cases.push_back(hs066());
  cases.push_back(hs076());
  cases.push_back(hs100());
  cases.push_back(hs113());
  cases.push_back(s264());
  return cases;
}

}  // namespace ssfd
