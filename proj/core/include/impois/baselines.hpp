#pragma once

namespace impois {

// Phi(z), absolute error well below 1e-12.
double standard_normal_cdf(double z);

// Two-sided p-value of the textbook normal test for X ~ N(theta0, theta0):
// 2 - 2*Phi(|x - theta0| / sqrt(theta0)).
double normal_approx_pvalue(int x, double theta0);

// Poisson equal-tail p-value 2*min{F(x), 1 - F(x-1)}, reported raw; it can
// exceed 1 near the mode.  Rejection decisions use this raw value.
double equal_tail_pvalue(int x, double theta0);

// min(1, equal_tail_pvalue), for plotting.
double equal_tail_pvalue_capped(int x, double theta0);

}  // namespace impois
