#include "impois/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "impois/dist.hpp"

namespace impois {

double standard_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double normal_approx_pvalue(int x, double theta0) {
  if (!(theta0 > 0.0)) throw std::domain_error("theta0 must be > 0");
  const double z = std::fabs(static_cast<double>(x) - theta0) / std::sqrt(theta0);
  return 2.0 - 2.0 * standard_normal_cdf(z);
}

double equal_tail_pvalue(int x, double theta0) {
  if (!(theta0 > 0.0)) throw std::domain_error("theta0 must be > 0");
  const double lower = poisson_cdf(x, theta0);
  const double upper = 1.0 - poisson_cdf(x - 1, theta0);
  return 2.0 * std::min(lower, upper);
}

double equal_tail_pvalue_capped(int x, double theta0) {
  return std::min(1.0, equal_tail_pvalue(x, theta0));
}

}  // namespace impois
