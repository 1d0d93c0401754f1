#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace impois {

// Natural-parameter scores at theta0: t = x - theta0, v = t^2 - theta0.
struct ScorePair {
  double t;
  double v;
};

ScorePair score_pair(int x, double theta0);

// Raised when the recursive ordering cannot extend the ranking (both
// candidate second-moment proxies positive).  Carries the partial state.
class OrderingStopped : public std::runtime_error {
 public:
  OrderingStopped(double theta0, double epsilon, std::vector<int> partial);

  double theta0() const { return theta0_; }
  double epsilon() const { return epsilon_; }
  const std::vector<int>& partial_order() const { return partial_; }

 private:
  double theta0_;
  double epsilon_;
  std::vector<int> partial_;
};

// The score-balanced ordering over the truncated sample space {0..N}.
// support lists x by rank (rank r = index + 1) and is a permutation of
// {0..truncation_bound}.
struct Ranking {
  double theta0 = 0.0;
  double epsilon = 0.0;
  int truncation_bound = 0;
  std::vector<int> support;

  // Internal tables filled by build_ranking: pmf by x and cumulative ranked
  // mass (prefix_mass[r] = pmf mass of the first r ranked elements).
  std::vector<int> rank_by_x;
  std::vector<double> pmf_by_x;
  std::vector<double> prefix_mass;

  int size() const { return static_cast<int>(support.size()); }

  // Rank of x; every x outside {0..N} gets rank size()+1.
  int rank_of(int x) const;

  double pmf(int x) const;

  // Mass of all elements ranked strictly below r, for r in [1, size()+1].
  double mass_before_rank(int r) const;

  // F_theta0(truncation_bound), at least 1 - epsilon.
  double total_mass() const { return prefix_mass.back(); }
};

// Minimal N with F_theta0(N) >= 1 - epsilon; the support set is {0..N}.
int truncate_support(double theta0, double epsilon);

// The recursive ordering.  Candidates are min X^+ (scores >= 0) and
// max X^- (scores < 0); the log-derivative proxy tau and second-moment proxy
// nu decide which side extends the prefix.  Throws OrderingStopped if both
// nu values turn positive.
Ranking build_ranking(double theta0, double epsilon);

// Process-wide ranking cache keyed by (theta0, epsilon).  Safe for
// concurrent read/insert; entries for equal keys are value-identical, so
// the last writer winning is harmless.
std::shared_ptr<const Ranking> cached_ranking(double theta0, double epsilon);

// Cumulative score diagnostics: t[r-1] = T(r), v[r-1] = V(r), the running
// sums of t*pmf and v*pmf in rank order.  T(r) should stay near zero and
// V(r) should stay negative until the truncation slack brings it back to ~0.
struct Diagnostics {
  std::vector<double> t;
  std::vector<double> v;
};

Diagnostics diagnostics(const Ranking& ranking);

// psi_x(theta) = sum of f_theta over elements ranked strictly below x,
// evaluated per grid point.  x must be inside the ranked support.
std::vector<double> psi_curve(const Ranking& ranking, int x,
                              const std::vector<double>& theta_grid);

}  // namespace impois
