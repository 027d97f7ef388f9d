#include "ssfd/params.hpp"

#include "ssfd/errors.hpp"

namespace ssfd {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw ConfigError(std::string("SolverParams: ") + what);
}
}  // namespace

void SolverParams::validate() const {
  require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0,1)");
  require(eta > 0.0 && eta < 1.0, "eta must lie in (0,1)");
  require(ls_epsilon > 0.0 && ls_epsilon < 1.0, "ls_epsilon must lie in (0,1)");
  require(theta > 0.0 && theta < sigma, "theta must lie in (0,sigma)");
  require(sigma < 1.0, "sigma must lie in (theta,1)");
  require(varrho > 0.0 && varrho < sigma, "varrho must lie in (0,sigma)");
  require(xi > 0.0, "xi must be positive");
  require(zeta > 0.0, "zeta must be positive");
  require(alpha > 0.0 && alpha < 0.5, "alpha must lie in (0,0.5)");
  require(rho > 1.0, "rho must exceed 1");
  require(delta > 2.0, "delta must exceed 2");
  require(tau > 2.0 && tau < 3.0, "tau must lie in (2,3)");
  require(tol_d0 > 0.0, "tol_d0 must be positive");
  require(max_iter >= 1, "max_iter must be at least 1");
  require(max_step5_backtracks >= 1, "max_step5_backtracks must be at least 1");
}

}  // namespace ssfd
