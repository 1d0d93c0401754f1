#pragma once

#include <stdexcept>

namespace impois {

// Hypothesis about the Poisson mean theta.
struct Assertion {
  enum class Kind { kGreater, kLessEqual, kPoint, kPointComplement };

  Kind kind;
  double theta0;

  static Assertion greater(double theta0);          // (theta0, inf)
  static Assertion less_equal(double theta0);       // (0, theta0]
  static Assertion point(double theta0);            // {theta0}
  static Assertion point_complement(double theta0); // {theta0}^c

  bool is_one_sided() const {
    return kind == Kind::kGreater || kind == Kind::kLessEqual;
  }
};

// Lower and upper support for an assertion; 0 <= belief <= plausibility <= 1.
struct BeliefPair {
  double belief = 0.0;
  double plausibility = 0.0;
};

// Candidate parameter interval for an observation/auxiliary pair, kept in
// (x, u) form.  The gamma-quantile endpoints are never materialized; the
// membership test only needs gamma CDF values.
struct CandidateSet {
  int x;
  double u;

  bool contains(double theta) const;
};

// Closed-form optimal IM for one-sided assertions:
//   A = (theta0, inf):  bel = F(x-1), pl = F(x)
//   A = (0, theta0]:    bel = 1 - F(x), pl = 1 - F(x-1)
BeliefPair one_sided(int x, const Assertion& a);

// The fiducial/Dempster-Shafer probability of the assertion given x.  Upper
// bound on the belief of any valid IM for that assertion.
double fiducial_bound(int x, const Assertion& a);

}  // namespace impois
