#include "level_set.hpp"

#include <cstddef>

namespace impois::detail {

namespace {

// Bisection for the level-set edge inside [a, b].  rising: value <= alpha at
// a, > alpha at b (lower edge); falling is the mirror image.  One x4
// refinement pass first picks the outermost crossing sub-cell.
double edge_bisect(const std::function<double(double)>& value_at, double a,
                   double b, double alpha, bool rising, double tol) {
  double xs[5];
  double vs[5];
  for (int k = 0; k < 5; ++k) {
    xs[k] = a + (b - a) * k / 4.0;
    vs[k] = value_at(xs[k]);
  }
  if (rising) {
    for (int k = 0; k < 4; ++k) {
      if (vs[k] <= alpha && vs[k + 1] > alpha) {
        a = xs[k];
        b = xs[k + 1];
        break;
      }
    }
  } else {
    for (int k = 3; k >= 0; --k) {
      if (vs[k] > alpha && vs[k + 1] <= alpha) {
        a = xs[k];
        b = xs[k + 1];
        break;
      }
    }
  }
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const bool above = value_at(m) > alpha;
    if (above == rising) {
      b = m;
    } else {
      a = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

LevelSetHull scan_level_set(const std::function<double(double)>& value_at,
                            const std::vector<double>& grid, double alpha,
                            double tol) {
  LevelSetHull hull;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = value_at(grid[i]);

  std::ptrdiff_t first = -1;
  std::ptrdiff_t last = -1;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] > alpha) {
      if (first < 0) first = static_cast<std::ptrdiff_t>(i);
      last = static_cast<std::ptrdiff_t>(i);
    }
  }
  if (first < 0) return hull;

  hull.empty = false;
  hull.contiguous = true;
  for (std::ptrdiff_t i = first; i <= last; ++i)
    if (vals[static_cast<std::size_t>(i)] <= alpha) hull.contiguous = false;

  if (first == 0) {
    hull.lower = grid.front();
    hull.touches_grid_start = true;
  } else {
    hull.lower = edge_bisect(value_at, grid[static_cast<std::size_t>(first) - 1],
                             grid[static_cast<std::size_t>(first)], alpha,
                             /*rising=*/true, tol);
  }
  if (last == static_cast<std::ptrdiff_t>(grid.size()) - 1) {
    hull.upper = grid.back();
    hull.touches_grid_end = true;
  } else {
    hull.upper = edge_bisect(value_at, grid[static_cast<std::size_t>(last)],
                             grid[static_cast<std::size_t>(last) + 1], alpha,
                             /*rising=*/false, tol);
  }
  return hull;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace impois::detail
