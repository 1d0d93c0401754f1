#include "impois/constrained.hpp"

#include <cmath>

#include "impois/ordering.hpp"
#include "level_set.hpp"

namespace impois {

namespace {

void require_beta(double beta) {
  if (!(beta > 0.0)) throw std::domain_error("beta must be > 0");
}

void require_x(int x) {
  if (x < 0) throw std::invalid_argument("x must be a nonnegative integer");
}

}  // namespace

double conflict_mass(int x, double beta, double epsilon) {
  require_x(x);
  require_beta(beta);
  const auto ranking = cached_ranking(beta, epsilon);
  // A ranked prefix stays wholly below the constraint cut G_{x+1}(beta)
  // exactly as long as its elements all exceed x (G_a(beta) decreases in a).
  double mass = 0.0;
  for (int xp : ranking->support) {
    if (xp <= x) break;
    mass += ranking->pmf(xp);
  }
  return mass;
}

double ebsb_plausibility(int x, double theta0, double beta, double epsilon) {
  require_x(x);
  require_beta(beta);
  if (!(theta0 > 0.0)) throw std::domain_error("theta0 must be > 0");
  if (theta0 < beta) return 0.0;
  if (theta0 == beta && conflict_mass(x, beta, epsilon) > 0.0) return 1.0;
  return point_plausibility(x, theta0, epsilon);
}

PlausibilityInterval lambda_interval(int x, double beta, double alpha,
                                     double epsilon) {
  require_x(x);
  require_beta(beta);
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0,1)");

  const double top = std::max(static_cast<double>(x), beta);
  const double hi = top + 10.0 * std::sqrt(top + 1.0) + 10.0;
  const std::vector<double> grid = detail::linear_grid(beta, hi, 512);

  const auto pl_at = [&](double theta) {
    return ebsb_plausibility(x, theta, beta, epsilon);
  };
  const auto hull = detail::scan_level_set(pl_at, grid, alpha, 1e-6);
  if (hull.empty)
    throw std::runtime_error("lambda_interval: empty level set");

  PlausibilityInterval out;
  out.x = x;
  out.alpha = alpha;
  out.lower = std::max(0.0, hull.lower - beta);
  out.upper = hull.upper - beta;
  out.contiguous = hull.contiguous;
  return out;
}

}  // namespace impois
