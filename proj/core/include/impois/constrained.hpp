#pragma once

#include <stdexcept>

#include "impois/two_sided.hpp"

namespace impois {

// Known background mean in the mean-plus-background decomposition
// theta = lambda + beta, which constrains theta >= beta.
struct ConstraintSpec {
  double beta;
  explicit ConstraintSpec(double b) : beta(b) {
    if (!(b >= 0.0)) throw std::domain_error("ConstraintSpec: beta must be >= 0");
  }
};

// Mass of the largest ranked prefix at theta0 = beta whose support cells lie
// wholly below the constraint cut G_{x+1}(beta); equivalently the mass of
// the leading ranked elements all exceeding x.
double conflict_mass(int x, double beta, double epsilon);

// EB-SB plausibility for {theta0}: 0 below beta; 1 at beta when there is
// conflict mass to relocate there; the unconstrained point plausibility
// otherwise.
double ebsb_plausibility(int x, double theta0, double beta, double epsilon);

// Level set of ebsb_plausibility over theta >= beta, reported for
// lambda = theta - beta (lower clipped at 0).
PlausibilityInterval lambda_interval(int x, double beta, double alpha,
                                     double epsilon);

}  // namespace impois
