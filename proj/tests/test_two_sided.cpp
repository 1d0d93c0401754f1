#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "impois/dist.hpp"
#include "impois/ordering.hpp"
#include "impois/two_sided.hpp"

using namespace impois;

namespace {

// Independent prefix-summation oracle: re-rank, then add log-space pmfs in
// rank order until x is reached.
double oracle_pl(int x, double theta0, double eps) {
  const auto r = build_ranking(theta0, eps);
  double prefix = 0.0;
  for (int xp : r.support) {
    if (xp == x) return 1.0 - prefix;
    prefix += poisson_pmf(xp, theta0);
  }
  return 1.0 - prefix;  // x outside the support: everything ranked below
}

}  // namespace

TEST_CASE("point plausibility peaks at the rank-one cell") {
  CHECK(point_plausibility(7, 7.0, 1e-10) == 1.0);
  for (int m = 1; m <= 20; ++m) CHECK(point_plausibility(m, m, 1e-10) == 1.0);
}

TEST_CASE("outside the truncated support the plausibility is below eps") {
  const int n = truncate_support(0.5, 1e-10);
  CHECK(point_plausibility(n + 17, 0.5, 1e-10) <= 1e-10);
  CHECK(point_plausibility(200, 7.0, 1e-10) <= 1e-10);
}

TEST_CASE("prefix summation oracle agrees") {
  for (double theta0 : {0.5, 3.7, 7.0, 15.0}) {
    for (int x = 0; x <= 30; ++x) {
      CHECK(point_plausibility(x, theta0, 1e-10) ==
            doctest::Approx(oracle_pl(x, theta0, 1e-10)).epsilon(1e-11));
    }
  }
}

TEST_CASE("two-sided belief") {
  CHECK(two_sided_belief(7, 7.0, 1e-10) == 0.0);
  const auto r = build_ranking(7.0, 1e-10);
  const int second = r.support[1];
  CHECK(two_sided_belief(second, 7.0, 1e-10) ==
        doctest::Approx(0.1490027797).epsilon(1e-7));  // f_7(7)
  for (int x = 0; x <= 25; ++x)
    for (double theta0 : {2.0, 7.0, 11.5})
      CHECK(two_sided_belief(x, theta0, 1e-10) <=
            1.0 - poisson_pmf(x, theta0) + 1e-12);
  CHECK_THROWS_AS(point_plausibility(-1, 7.0, 1e-10), std::invalid_argument);
}

TEST_CASE("plausibility curve shapes") {
  std::vector<double> grid;
  for (double t = 2.0; t <= 10.0 + 1e-9; t += 0.05) grid.push_back(t);

  const auto x7 = plausibility_curve(7, grid, 1e-10);
  const std::size_t at7 = 100;  // grid[100] = 7.0
  CHECK(x7.theta_grid[at7] == doctest::Approx(7.0));
  CHECK(x7.values[at7] == 1.0);

  // x = 0 decays beyond its peak region
  const auto x0 = plausibility_curve(0, grid, 1e-10);
  for (std::size_t i = 1; i < x0.values.size(); ++i)
    CHECK(x0.values[i] <= x0.values[i - 1] + 1e-12);
}

TEST_CASE("curve argmax at the observed count on an integer grid") {
  std::vector<double> grid;
  for (double t = 1.0; t <= 12.0; t += 1.0) grid.push_back(t);
  const auto c = plausibility_curve(3, grid, 1e-10);
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.values.size(); ++i)
    if (c.values[i] > c.values[best]) best = i;
  CHECK(c.theta_grid[best] == doctest::Approx(3.0));
  CHECK(c.values[best] == 1.0);
}

TEST_CASE("curve is worker-count invariant") {
  std::vector<double> grid;
  for (double t = 0.5; t <= 14.0; t += 0.037) grid.push_back(t);
  const auto serial = plausibility_curve(4, grid, 1e-10, 1);
  const auto parallel = plausibility_curve(4, grid, 1e-10, 5);
  CHECK(serial.values == parallel.values);
}

TEST_CASE("interval basics") {
  const auto tight = plausibility_interval(7, 0.9999, 1e-10);
  CHECK(tight.lower <= 7.0);
  CHECK(tight.upper >= 7.0);
  CHECK(tight.upper - tight.lower < 2.0);
  CHECK(tight.contiguous);

  const auto from_zero = plausibility_interval(0, 0.1, 1e-10);
  CHECK(from_zero.lower == 0.0);
  CHECK(from_zero.upper == doctest::Approx(2.4545525).epsilon(1e-4));

  const auto x7 = plausibility_interval(7, 0.1, 1e-10);
  const double normal_width = 2.0 * 1.645 * std::sqrt(7.0);
  const double width = x7.upper - x7.lower;
  CHECK(std::fabs(width - normal_width) / normal_width <= 0.15);

  CHECK_THROWS_AS(plausibility_interval(7, 0.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(plausibility_interval(7, 1.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(plausibility_interval(-2, 0.1, 1e-10), std::invalid_argument);
}

TEST_CASE("integer x always sits inside its own interval") {
  for (int x : {0, 3, 7, 10, 25}) {
    for (double alpha : {0.1, 0.5, 0.9}) {
      const auto iv = plausibility_interval(x, alpha, 1e-10);
      CHECK(iv.lower <= static_cast<double>(x));
      CHECK(iv.upper >= static_cast<double>(x));
    }
  }
}

TEST_CASE("test-rule consistency with the interval boundary") {
  const double eps = 1e-10;
  for (int x : {0, 3, 7, 12}) {
    for (double alpha : {0.1, 0.35, 0.6}) {
      const auto iv = plausibility_interval(x, alpha, eps);
      if (!iv.contiguous) continue;
      const double tol = 2e-6;
      // strictly inside the hull: not rejected
      for (double frac : {0.1, 0.5, 0.9}) {
        const double theta = iv.lower + frac * (iv.upper - iv.lower);
        if (theta <= iv.lower + tol || theta >= iv.upper - tol) continue;
        if (!(theta > 0.0)) continue;
        CHECK(point_plausibility(x, theta, eps) > alpha);
      }
      // outside the hull: rejected
      if (iv.lower > tol)
        CHECK(point_plausibility(x, iv.lower - tol, eps) <= alpha);
      CHECK(point_plausibility(x, iv.upper + tol, eps) <= alpha);
    }
  }
}
