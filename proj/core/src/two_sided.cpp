#include "impois/two_sided.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "impois/ordering.hpp"
#include "level_set.hpp"

namespace impois {

namespace {

void require_x(int x) {
  if (x < 0) throw std::invalid_argument("x must be a nonnegative integer");
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0,1)");
}

constexpr double kThetaTol = 1e-6;   // interval boundary tolerance
constexpr double kBracketFloor = 1e-8;

}  // namespace

double point_plausibility(int x, double theta0, double epsilon) {
  require_x(x);
  const auto ranking = cached_ranking(theta0, epsilon);
  return 1.0 - ranking->mass_before_rank(ranking->rank_of(x));
}

double two_sided_belief(int x, double theta0, double epsilon) {
  return 1.0 - point_plausibility(x, theta0, epsilon);
}

PlausibilityCurve plausibility_curve(int x, const std::vector<double>& theta_grid,
                                     double epsilon, int workers) {
  require_x(x);
  for (double t : theta_grid)
    if (!(t > 0.0)) throw std::domain_error("plausibility_curve: grid must be positive");

  PlausibilityCurve curve;
  curve.x = x;
  curve.theta_grid = theta_grid;
  curve.values.assign(theta_grid.size(), 0.0);

  const std::size_t n = theta_grid.size();
  const auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      curve.values[i] = point_plausibility(x, theta_grid[i], epsilon);
  };

  if (workers <= 1 || n < 16) {
    eval_range(0, n);
    return curve;
  }
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  const std::size_t chunk = (n + w - 1) / w;
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t lo = k * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(eval_range, lo, hi);
  }
  for (auto& t : pool) t.join();
  return curve;
}

PlausibilityInterval plausibility_interval(int x, double alpha, double epsilon) {
  require_x(x);
  require_alpha(alpha);

  const double spread = 10.0 * std::sqrt(static_cast<double>(x) + 1.0);
  const double lo = std::max(kBracketFloor, static_cast<double>(x) - spread);
  const double hi = static_cast<double>(x) + spread + 10.0;
  const bool clipped = lo == kBracketFloor;

  std::vector<double> grid;
  if (clipped) {
    // Geometric points resolve the near-zero region, linear above 1.
    constexpr int kGeo = 128;
    grid.reserve(512);
    const double ratio = std::pow(1.0 / kBracketFloor, 1.0 / kGeo);
    double g = kBracketFloor;
    for (int i = 0; i < kGeo; ++i, g *= ratio) grid.push_back(g);
    const auto lin = detail::linear_grid(1.0, hi, 512 - kGeo);
    grid.insert(grid.end(), lin.begin(), lin.end());
  } else {
    grid = detail::linear_grid(lo, hi, 512);
  }

  const auto pl_at = [&](double theta) {
    return point_plausibility(x, theta, epsilon);
  };
  const auto hull = detail::scan_level_set(pl_at, grid, alpha, kThetaTol);
  if (hull.empty)
    throw std::runtime_error("plausibility_interval: empty level set");

  PlausibilityInterval out;
  out.x = x;
  out.alpha = alpha;
  // A level set touching the clipped bracket extends to theta -> 0+.
  out.lower = (hull.touches_grid_start && clipped) ? 0.0 : hull.lower;
  out.upper = hull.upper;
  out.contiguous = hull.contiguous;
  return out;
}

}  // namespace impois
