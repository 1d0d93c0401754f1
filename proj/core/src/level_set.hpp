#pragma once

#include <functional>
#include <vector>

namespace impois::detail {

struct LevelSetHull {
  bool empty = true;
  double lower = 0.0;
  double upper = 0.0;
  bool contiguous = true;
  bool touches_grid_start = false;
  bool touches_grid_end = false;
};

// Hull of {g : value_at(g) > alpha} over the given grid, boundary crossings
// refined to the absolute tolerance.  Edge cells are split x4 before
// bisection so a rank-change jump inside a cell cannot move the hull edge
// inward: the outermost sub-crossing is kept.
LevelSetHull scan_level_set(const std::function<double(double)>& value_at,
                            const std::vector<double>& grid, double alpha,
                            double tol);

std::vector<double> linear_grid(double lo, double hi, int n);

}  // namespace impois::detail
