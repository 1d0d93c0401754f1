#pragma once

#include <vector>

namespace impois {

// Plausibility of the point assertion {theta0} under the score-balanced
// ranking: 1 minus the pmf mass of all strictly lower-ranked points.
double point_plausibility(int x, double theta0, double epsilon);

// Belief in {theta0}^c = 1 - point_plausibility.  Belief in {theta0} itself
// is zero by construction.
double two_sided_belief(int x, double theta0, double epsilon);

struct PlausibilityCurve {
  int x = 0;
  std::vector<double> theta_grid;
  std::vector<double> values;
};

// point_plausibility per grid value; each theta gets its own ranking.
// Evaluation parallelizes across grid points; results are independent of
// the worker count.
PlausibilityCurve plausibility_curve(int x, const std::vector<double>& theta_grid,
                                     double epsilon, int workers = 1);

// Hull of the level set {theta : pl > alpha} with a contiguity flag
// (false if any interior grid point dips to alpha or below).  For
// lambda_interval the endpoints are reported on the lambda = theta - beta
// scale.
struct PlausibilityInterval {
  int x = 0;
  double alpha = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool contiguous = true;
};

// Level set of point_plausibility over an adaptive grid, boundaries refined
// by bisection to absolute theta tolerance 1e-6.
PlausibilityInterval plausibility_interval(int x, double alpha, double epsilon);

}  // namespace impois
