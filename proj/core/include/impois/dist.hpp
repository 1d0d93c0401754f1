#pragma once

#include <cstdint>
#include <stdexcept>

namespace impois {

// Poisson mean (events per observation window).  Strictly positive.
struct PoissonParam {
  double theta;
  explicit PoissonParam(double t) : theta(t) {
    if (!(t > 0.0)) throw std::domain_error("PoissonParam: theta must be > 0");
  }
};

// Gamma shape parameter, rate fixed at one.  Strictly positive.
struct GammaShape {
  double a;
  explicit GammaShape(double shape) : a(shape) {
    if (!(shape > 0.0)) throw std::domain_error("GammaShape: a must be > 0");
  }
};

double poisson_log_pmf(int x, double theta);
double poisson_pmf(int x, double theta);

// P(X <= x) by direct pmf recurrence; 0 for x < 0.
double poisson_cdf(int x, double theta);

// P(X > x), evaluated through the gamma route as G_{x+1}(theta).
double poisson_sf(int x, double theta);

// Regularized lower incomplete gamma P(a, theta): series for theta < a+1,
// modified-Lentz continued fraction otherwise.
double gamma_cdf(double a, double theta);

// Regularized upper incomplete gamma Q(a, theta) = 1 - P(a, theta), computed
// directly so deep-tail values keep full relative accuracy.
double gamma_q(double a, double theta);

// Smallest x with poisson_cdf(x, theta) >= p, for p in (0, 1).
int poisson_quantile(double theta, double p);

// Deterministic counter-based uniform stream: draw i of stream s under a
// given seed is a pure function of (seed, s, i).  Streams never share state,
// so replicate substreams can be handed to workers in any order.
class UniformStream {
 public:
  UniformStream(std::uint64_t seed, std::uint64_t stream);

  // Uniform on the open interval (0, 1).
  double next();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Exact CDF inversion: the smallest x with F_theta(x) >= 1 - U.  Consumes one
// uniform per draw.  Means above ~700 are drawn as sums of independent
// smaller-mean draws (Poisson additivity), consuming one uniform per part.
int poisson_sample(double theta, UniformStream& u);

}  // namespace impois
