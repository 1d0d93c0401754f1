#include "impois/im.hpp"

#include "impois/dist.hpp"

namespace impois {

namespace {

Assertion make(Assertion::Kind kind, double theta0) {
  if (!(theta0 > 0.0)) throw std::domain_error("Assertion: theta0 must be > 0");
  return Assertion{kind, theta0};
}

void require_x(int x) {
  if (x < 0) throw std::invalid_argument("x must be a nonnegative integer");
}

}  // namespace

Assertion Assertion::greater(double theta0) { return make(Kind::kGreater, theta0); }
Assertion Assertion::less_equal(double theta0) { return make(Kind::kLessEqual, theta0); }
Assertion Assertion::point(double theta0) { return make(Kind::kPoint, theta0); }
Assertion Assertion::point_complement(double theta0) {
  return make(Kind::kPointComplement, theta0);
}

bool CandidateSet::contains(double theta) const {
  if (!(theta > 0.0)) throw std::domain_error("CandidateSet: theta must be > 0");
  // G_{x+1}(theta) < u <= G_x(theta), with G_0 == 1.
  const double upper = (x == 0) ? 1.0 : gamma_cdf(static_cast<double>(x), theta);
  return gamma_cdf(static_cast<double>(x) + 1.0, theta) < u && u <= upper;
}

BeliefPair one_sided(int x, const Assertion& a) {
  require_x(x);
  if (!a.is_one_sided())
    throw std::invalid_argument("one_sided: assertion must be one-sided");
  const double cdf_below = poisson_cdf(x - 1, a.theta0);  // F(x-1)
  const double cdf_at = poisson_cdf(x, a.theta0);         // F(x)
  if (a.kind == Assertion::Kind::kGreater) return {cdf_below, cdf_at};
  return {1.0 - cdf_at, 1.0 - cdf_below};
}

double fiducial_bound(int x, const Assertion& a) {
  require_x(x);
  switch (a.kind) {
    case Assertion::Kind::kGreater:
      return poisson_cdf(x - 1, a.theta0);
    case Assertion::Kind::kLessEqual:
      return 1.0 - poisson_cdf(x, a.theta0);
    case Assertion::Kind::kPoint:
      // Candidate sets are nondegenerate intervals, never inside a singleton.
      return 0.0;
    case Assertion::Kind::kPointComplement:
      return 1.0 - poisson_pmf(x, a.theta0);
  }
  throw std::logic_error("fiducial_bound: unknown assertion kind");
}

}  // namespace impois
