#include "impois/ordering.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "impois/dist.hpp"

namespace impois {

ScorePair score_pair(int x, double theta0) {
  if (!(theta0 > 0.0)) throw std::domain_error("score_pair: theta0 must be > 0");
  const double t = static_cast<double>(x) - theta0;
  return {t, t * t - theta0};
}

OrderingStopped::OrderingStopped(double theta0, double epsilon, std::vector<int> partial)
    : std::runtime_error("ordering stopped at rank " +
                         std::to_string(partial.size() + 1) + " for theta0=" +
                         std::to_string(theta0)),
      theta0_(theta0),
      epsilon_(epsilon),
      partial_(std::move(partial)) {}

int Ranking::rank_of(int x) const {
  if (x < 0 || x > truncation_bound) return size() + 1;
  return rank_by_x[static_cast<std::size_t>(x)];
}

double Ranking::pmf(int x) const {
  if (x < 0 || x > truncation_bound) return 0.0;
  return pmf_by_x[static_cast<std::size_t>(x)];
}

double Ranking::mass_before_rank(int r) const {
  if (r < 1 || r > size() + 1)
    throw std::invalid_argument("mass_before_rank: rank out of range");
  return prefix_mass[static_cast<std::size_t>(r) - 1];
}

namespace {

void check_ordering_args(double theta0, double epsilon) {
  if (!(theta0 > 0.0)) throw std::domain_error("theta0 must be > 0");
  if (!(theta0 <= 700.0))
    throw std::domain_error("theta0 too large for the pmf recurrence");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::domain_error("epsilon must be in (0,1)");
}

std::vector<double> pmf_table(double theta0, int n) {
  std::vector<double> f(static_cast<std::size_t>(n) + 1);
  f[0] = std::exp(-theta0);
  for (int k = 1; k <= n; ++k) f[k] = f[k - 1] * theta0 / k;
  return f;
}

}  // namespace

int truncate_support(double theta0, double epsilon) {
  check_ordering_args(theta0, epsilon);
  double f = std::exp(-theta0);
  double s = f;
  int n = 0;
  while (s < 1.0 - epsilon) {
    ++n;
    f *= theta0 / n;
    s += f;
  }
  return n;
}

Ranking build_ranking(double theta0, double epsilon) {
  check_ordering_args(theta0, epsilon);
  const int n_trunc = truncate_support(theta0, epsilon);
  const std::vector<double> f = pmf_table(theta0, n_trunc);

  const auto score_t = [theta0](int x) { return static_cast<double>(x) - theta0; };
  const auto score_v = [theta0, &score_t](int x) {
    const double t = score_t(x);
    return t * t - theta0;
  };

  // X^+ = {x >= theta0} consumed from below, X^- = {x < theta0} from above.
  int plus = static_cast<int>(std::ceil(theta0));
  int minus = std::min(plus - 1, n_trunc);

  Ranking out;
  out.theta0 = theta0;
  out.epsilon = epsilon;
  out.truncation_bound = n_trunc;
  out.support.reserve(static_cast<std::size_t>(n_trunc) + 1);
  out.prefix_mass.assign(1, 0.0);
  out.prefix_mass.reserve(static_cast<std::size_t>(n_trunc) + 2);

  double sum_f = 0.0;   // pmf mass of the current prefix
  double sum_tf = 0.0;  // running sum of t * pmf
  double sum_vf = 0.0;  // running sum of v * pmf

  for (int r = 1; r <= n_trunc + 1; ++r) {
    const bool has_plus = plus <= n_trunc;
    const bool has_minus = minus >= 0;
    int pick;
    bool from_plus;
    if (!has_plus && !has_minus) break;
    if (!has_plus) {
      pick = minus;
      from_plus = false;
    } else if (!has_minus) {
      pick = plus;
      from_plus = true;
    } else {
      const double fp = f[static_cast<std::size_t>(plus)];
      const double fm = f[static_cast<std::size_t>(minus)];
      const double tau_p = (sum_tf + score_t(plus) * fp) / (sum_f + fp);
      const double tau_m = (sum_tf + score_t(minus) * fm) / (sum_f + fm);
      const double nu_p = sum_vf + score_v(plus) * fp;
      const double nu_m = sum_vf + score_v(minus) * fm;
      if (std::fabs(tau_p) <= std::fabs(tau_m) && nu_p <= 0.0) {
        pick = plus;
        from_plus = true;
      } else if (nu_m <= 0.0) {
        pick = minus;
        from_plus = false;
      } else {
        throw OrderingStopped(theta0, epsilon, std::move(out.support));
      }
    }
    const double fx = f[static_cast<std::size_t>(pick)];
    sum_f += fx;
    sum_tf += score_t(pick) * fx;
    sum_vf += score_v(pick) * fx;
    out.support.push_back(pick);
    out.prefix_mass.push_back(sum_f);
    if (from_plus) {
      ++plus;
    } else {
      --minus;
    }
  }

  out.pmf_by_x = f;
  out.rank_by_x.assign(static_cast<std::size_t>(n_trunc) + 1, 0);
  for (int i = 0; i < out.size(); ++i)
    out.rank_by_x[static_cast<std::size_t>(out.support[i])] = i + 1;
  return out;
}

std::shared_ptr<const Ranking> cached_ranking(double theta0, double epsilon) {
  static std::shared_mutex mutex;
  static std::map<std::pair<double, double>, std::shared_ptr<const Ranking>> cache;
  constexpr std::size_t kMaxEntries = 8192;

  const std::pair<double, double> key{theta0, epsilon};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const Ranking>(build_ranking(theta0, epsilon));
  {
    std::unique_lock lock(mutex);
    if (cache.size() >= kMaxEntries) cache.clear();
    cache[key] = built;
  }
  return built;
}

Diagnostics diagnostics(const Ranking& ranking) {
  Diagnostics d;
  d.t.reserve(ranking.support.size());
  d.v.reserve(ranking.support.size());
  double sum_tf = 0.0;
  double sum_vf = 0.0;
  for (int x : ranking.support) {
    const ScorePair s = score_pair(x, ranking.theta0);
    const double fx = ranking.pmf(x);
    sum_tf += s.t * fx;
    sum_vf += s.v * fx;
    d.t.push_back(sum_tf);
    d.v.push_back(sum_vf);
  }
  return d;
}

std::vector<double> psi_curve(const Ranking& ranking, int x,
                              const std::vector<double>& theta_grid) {
  const int rank = ranking.rank_of(x);
  if (rank > ranking.size())
    throw std::invalid_argument("psi_curve: x outside the ranked support");
  std::vector<int> prefix(ranking.support.begin(),
                          ranking.support.begin() + (rank - 1));
  std::vector<double> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    if (!(theta > 0.0)) throw std::domain_error("psi_curve: theta must be > 0");
    double sum = 0.0;
    for (int xp : prefix) sum += poisson_pmf(xp, theta);
    out.push_back(sum);
  }
  return out;
}

}  // namespace impois
