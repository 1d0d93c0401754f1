#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace impois {

struct SimConfig {
  double theta0 = 7.0;
  std::vector<double> theta_true_list;
  long long n_samples = 100000;
  std::uint64_t seed = 0;
  std::vector<double> alpha_grid;  // strictly increasing, inside (0,1)
  double epsilon = 1e-10;

  // {0.01, 0.02, ..., 0.99}
  static std::vector<double> default_alpha_grid();

  void validate() const;
};

// A CSV table plus '#'-prefixed metadata lines echoing the configuration.
// Cell values are pre-formatted (floats with 10 significant digits), so a
// report is byte-stable for a fixed seed and config regardless of workers.
struct SimReport {
  std::vector<std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& os) const;
  std::string to_csv() const;
};

// Empirical CDF of the plausibility at theta0 for X ~ Pois(theta), per
// theta in theta_true_list, for the IM and both textbook baselines.
// Columns: method,theta_true,alpha,ecdf.
SimReport pl_cdf_simulation(const SimConfig& config, int workers = 1);

// Empirical coverage of lambda by the nominal (1-alpha) EB-SB lambda
// interval, X ~ Pois(lambda + beta).  Columns: lambda,coverage,n.
SimReport coverage_simulation(double beta, const std::vector<double>& lambda_grid,
                              double alpha, long long n, std::uint64_t seed,
                              double epsilon, int workers = 1);

// Deterministic interval-width table per observed x: the unconstrained
// plausibility interval (method "im", theta scale) and the EB-SB interval
// (method "ebsb", lambda scale).  Columns: x,method,lower,upper,width.
SimReport width_table(double beta, int x_min, int x_max, double alpha,
                      double epsilon);

// Wraps pl_cdf_simulation at theta = theta0 and flags any method whose
// empirical CDF exceeds the diagonal by more than 3*sqrt(alpha(1-alpha)/n)
// at some alpha.  Columns:
// method,theta0,n,worst_alpha,ecdf,excess,bound,verdict.
SimReport validity_report(const SimConfig& config, int workers = 1);

}  // namespace impois
