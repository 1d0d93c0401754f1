#include "impois/dist.hpp"

#include <cmath>
#include <limits>

namespace impois {

namespace {

void require_theta(double theta) {
  if (!(theta > 0.0)) throw std::domain_error("theta must be > 0");
}

// e^{-theta} underflows past this point; the pmf recurrence cannot start.
constexpr double kRecurrenceLimit = 700.0;

// Power series for the regularized lower incomplete gamma, theta < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 2000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified-Lentz continued fraction for the regularized upper incomplete
// gamma, theta >= a + 1.
double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 2000; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double mult = d * c;
    h *= mult;
    if (std::fabs(mult - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_cdf(double a, double theta) {
  if (!(a > 0.0)) throw std::domain_error("gamma_cdf: a must be > 0");
  if (!(theta >= 0.0)) throw std::domain_error("gamma_cdf: theta must be >= 0");
  if (theta == 0.0) return 0.0;
  if (theta < a + 1.0) return gamma_p_series(a, theta);
  const double q = gamma_q_cf(a, theta);
  return q < 1.0 ? 1.0 - q : 0.0;
}

double gamma_q(double a, double theta) {
  if (!(a > 0.0)) throw std::domain_error("gamma_q: a must be > 0");
  if (!(theta >= 0.0)) throw std::domain_error("gamma_q: theta must be >= 0");
  if (theta == 0.0) return 1.0;
  if (theta < a + 1.0) {
    const double p = gamma_p_series(a, theta);
    return p < 1.0 ? 1.0 - p : 0.0;
  }
  return gamma_q_cf(a, theta);
}

double poisson_log_pmf(int x, double theta) {
  require_theta(theta);
  if (x < 0) return -std::numeric_limits<double>::infinity();
  if (x == 0) return -theta;
  return -theta + x * std::log(theta) - std::lgamma(static_cast<double>(x) + 1.0);
}

double poisson_pmf(int x, double theta) {
  return std::exp(poisson_log_pmf(x, theta));
}

double poisson_cdf(int x, double theta) {
  require_theta(theta);
  if (x < 0) return 0.0;
  if (theta > kRecurrenceLimit) return gamma_q(static_cast<double>(x) + 1.0, theta);
  double f = std::exp(-theta);
  double s = f;
  for (int k = 1; k <= x; ++k) {
    f *= theta / k;
    s += f;
  }
  return s < 1.0 ? s : 1.0;
}

double poisson_sf(int x, double theta) {
  require_theta(theta);
  if (x < 0) return 1.0;
  return gamma_cdf(static_cast<double>(x) + 1.0, theta);
}

int poisson_quantile(double theta, double p) {
  require_theta(theta);
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("poisson_quantile: p must be in (0,1)");
  if (theta > kRecurrenceLimit) throw std::domain_error("poisson_quantile: theta too large");
  // Generous cap: the loop only reaches it when the running sum saturates
  // just below p in floating point.
  const int cap = static_cast<int>(theta + 64.0 * std::sqrt(theta + 1.0) + 64.0);
  double f = std::exp(-theta);
  double s = f;
  int x = 0;
  while (s < p && x < cap) {
    ++x;
    f *= theta / x;
    s += f;
  }
  return x;
}

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

UniformStream::UniformStream(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed) ^ stream)) {}

double UniformStream::next() {
  const std::uint64_t z = mix64(mix64(key_ ^ counter_++));
  // 53-bit mantissa, shifted off zero: strictly inside (0, 1).
  return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
}

int poisson_sample(double theta, UniformStream& u) {
  require_theta(theta);
  if (theta > kRecurrenceLimit) {
    const int parts = static_cast<int>(theta / 512.0) + 1;
    int total = 0;
    for (int i = 0; i < parts; ++i) total += poisson_sample(theta / parts, u);
    return total;
  }
  return poisson_quantile(theta, 1.0 - u.next());
}

}  // namespace impois
