#include "impois/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "impois/baselines.hpp"
#include "impois/constrained.hpp"
#include "impois/csv.hpp"
#include "impois/dist.hpp"
#include "impois/ordering.hpp"
#include "impois/two_sided.hpp"

namespace impois {

std::vector<double> SimConfig::default_alpha_grid() {
  std::vector<double> grid(99);
  for (int i = 1; i <= 99; ++i) grid[static_cast<std::size_t>(i) - 1] = i / 100.0;
  return grid;
}

void SimConfig::validate() const {
  if (!(theta0 > 0.0)) throw std::invalid_argument("SimConfig: theta0 must be > 0");
  if (theta_true_list.empty())
    throw std::invalid_argument("SimConfig: theta_true_list must be nonempty");
  for (double t : theta_true_list)
    if (!(t > 0.0)) throw std::invalid_argument("SimConfig: theta_true values must be > 0");
  if (n_samples < 1) throw std::invalid_argument("SimConfig: n_samples must be >= 1");
  if (alpha_grid.empty()) throw std::invalid_argument("SimConfig: alpha_grid must be nonempty");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] > 0.0 && alpha_grid[i] < 1.0))
      throw std::invalid_argument("SimConfig: alpha values must be in (0,1)");
    if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1]))
      throw std::invalid_argument("SimConfig: alpha_grid must be strictly increasing");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("SimConfig: epsilon must be in (0,1)");
}

void SimReport::write_csv(std::ostream& os) const {
  for (const auto& line : metadata) os << line << '\n';
  for (std::size_t c = 0; c < columns.size(); ++c)
    os << columns[c] << (c + 1 < columns.size() ? ',' : '\n');
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      os << row[c] << (c + 1 < row.size() ? ',' : '\n');
}

std::string SimReport::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

namespace {

int histogram_cap(double theta) {
  return static_cast<int>(theta + 64.0 * std::sqrt(theta + 1.0) + 64.0);
}

// Counter-based replicate substreams: replicate i of this run draws from
// stream (stream_base + i), so scheduling and worker count cannot change
// any draw.  Counts merge by integer addition.
std::vector<long long> sample_histogram(double theta, long long n,
                                        std::uint64_t seed,
                                        std::uint64_t stream_base, int workers) {
  const int cap = histogram_cap(theta);
  const auto fill = [&](long long lo, long long hi, std::vector<long long>& counts) {
    for (long long i = lo; i < hi; ++i) {
      UniformStream stream(seed, stream_base + static_cast<std::uint64_t>(i));
      const int x = std::min(poisson_sample(theta, stream), cap);
      ++counts[static_cast<std::size_t>(x)];
    }
  };

  std::vector<long long> counts(static_cast<std::size_t>(cap) + 1, 0);
  if (workers <= 1 || n < 1024) {
    fill(0, n, counts);
    return counts;
  }
  const int w = std::min<long long>(workers, n);
  const long long chunk = (n + w - 1) / w;
  std::vector<std::vector<long long>> local(
      static_cast<std::size_t>(w),
      std::vector<long long>(static_cast<std::size_t>(cap) + 1, 0));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (int k = 0; k < w; ++k) {
    const long long lo = k * chunk;
    const long long hi = std::min<long long>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fill, lo, hi, std::ref(local[static_cast<std::size_t>(k)]));
  }
  for (auto& t : pool) t.join();
  for (const auto& part : local)
    for (std::size_t x = 0; x < counts.size(); ++x) counts[x] += part[x];
  return counts;
}

constexpr const char* kMethods[] = {"im", "normal", "equal-tail"};

// Plausibility table per observed count for one method.
std::vector<double> method_table(int method, const Ranking& ranking, int cap) {
  std::vector<double> vals(static_cast<std::size_t>(cap) + 1);
  for (int x = 0; x <= cap; ++x) {
    double v = 0.0;
    switch (method) {
      case 0:
        v = 1.0 - ranking.mass_before_rank(ranking.rank_of(x));
        break;
      case 1:
        v = normal_approx_pvalue(x, ranking.theta0);
        break;
      default:
        v = equal_tail_pvalue(x, ranking.theta0);
        break;
    }
    vals[static_cast<std::size_t>(x)] = v;
  }
  return vals;
}

std::vector<double> ecdf_on_grid(const std::vector<double>& values,
                                 const std::vector<long long>& counts,
                                 const std::vector<double>& alpha_grid,
                                 long long n) {
  std::vector<double> ecdf;
  ecdf.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) {
    long long hits = 0;
    for (std::size_t x = 0; x < counts.size(); ++x)
      if (values[x] <= alpha) hits += counts[x];
    ecdf.push_back(static_cast<double>(hits) / static_cast<double>(n));
  }
  return ecdf;
}

}  // namespace

SimReport pl_cdf_simulation(const SimConfig& config, int workers) {
  config.validate();
  const auto ranking = cached_ranking(config.theta0, config.epsilon);

  SimReport rep;
  rep.metadata = {"# sim=pl-cdf",
                  "# theta0=" + format_g10(config.theta0),
                  "# n=" + std::to_string(config.n_samples),
                  "# seed=" + std::to_string(config.seed),
                  "# epsilon=" + format_g10(config.epsilon)};
  rep.columns = {"method", "theta_true", "alpha", "ecdf"};

  // One histogram per theta, shared by all three methods.
  std::vector<std::vector<long long>> histograms;
  histograms.reserve(config.theta_true_list.size());
  for (std::size_t ti = 0; ti < config.theta_true_list.size(); ++ti) {
    const std::uint64_t base =
        static_cast<std::uint64_t>(ti) * static_cast<std::uint64_t>(config.n_samples);
    histograms.push_back(sample_histogram(config.theta_true_list[ti],
                                          config.n_samples, config.seed, base,
                                          workers));
  }

  for (int mi = 0; mi < 3; ++mi) {
    for (std::size_t ti = 0; ti < config.theta_true_list.size(); ++ti) {
      const double theta = config.theta_true_list[ti];
      const auto& counts = histograms[ti];
      const auto values =
          method_table(mi, *ranking, static_cast<int>(counts.size()) - 1);
      const auto ecdf = ecdf_on_grid(values, counts, config.alpha_grid,
                                     config.n_samples);
      for (std::size_t ai = 0; ai < config.alpha_grid.size(); ++ai) {
        rep.rows.push_back({kMethods[mi], format_g10(theta),
                            format_g10(config.alpha_grid[ai]),
                            format_g10(ecdf[ai])});
      }
    }
  }
  return rep;
}

SimReport coverage_simulation(double beta, const std::vector<double>& lambda_grid,
                              double alpha, long long n, std::uint64_t seed,
                              double epsilon, int workers) {
  if (!(beta > 0.0)) throw std::invalid_argument("coverage: beta must be > 0");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("coverage: alpha must be in (0,1)");
  if (n < 1) throw std::invalid_argument("coverage: n must be >= 1");
  if (lambda_grid.empty())
    throw std::invalid_argument("coverage: lambda grid must be nonempty");
  for (double l : lambda_grid)
    if (!(l >= 0.0)) throw std::invalid_argument("coverage: lambda must be >= 0");

  SimReport rep;
  rep.metadata = {"# sim=coverage",
                  "# beta=" + format_g10(beta),
                  "# alpha=" + format_g10(alpha),
                  "# n=" + std::to_string(n),
                  "# seed=" + std::to_string(seed),
                  "# epsilon=" + format_g10(epsilon)};
  rep.columns = {"lambda", "coverage", "n"};

  // The interval depends only on the observed count, so it is computed once
  // per distinct x across the whole lambda grid.
  std::map<int, PlausibilityInterval> intervals;
  const auto interval_for = [&](int x) -> const PlausibilityInterval& {
    auto it = intervals.find(x);
    if (it == intervals.end())
      it = intervals.emplace(x, lambda_interval(x, beta, alpha, epsilon)).first;
    return it->second;
  };

  for (std::size_t li = 0; li < lambda_grid.size(); ++li) {
    const double lambda = lambda_grid[li];
    const std::uint64_t base =
        static_cast<std::uint64_t>(li) * static_cast<std::uint64_t>(n);
    const auto counts = sample_histogram(beta + lambda, n, seed, base, workers);
    long long covered = 0;
    for (std::size_t x = 0; x < counts.size(); ++x) {
      if (counts[x] == 0) continue;
      const auto& iv = interval_for(static_cast<int>(x));
      if (iv.lower <= lambda && lambda <= iv.upper) covered += counts[x];
    }
    rep.rows.push_back({format_g10(lambda),
                        format_g10(static_cast<double>(covered) / static_cast<double>(n)),
                        std::to_string(n)});
  }
  return rep;
}

SimReport width_table(double beta, int x_min, int x_max, double alpha,
                      double epsilon) {
  if (!(beta > 0.0)) throw std::invalid_argument("width_table: beta must be > 0");
  if (x_min < 0 || x_max < x_min)
    throw std::invalid_argument("width_table: bad x range");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("width_table: alpha must be in (0,1)");

  SimReport rep;
  rep.metadata = {"# sim=width",
                  "# beta=" + format_g10(beta),
                  "# alpha=" + format_g10(alpha),
                  "# epsilon=" + format_g10(epsilon)};
  rep.columns = {"x", "method", "lower", "upper", "width"};

  for (int x = x_min; x <= x_max; ++x) {
    const auto unconstrained = plausibility_interval(x, alpha, epsilon);
    rep.rows.push_back({std::to_string(x), "im", format_g10(unconstrained.lower),
                        format_g10(unconstrained.upper),
                        format_g10(unconstrained.upper - unconstrained.lower)});
    const auto ebsb = lambda_interval(x, beta, alpha, epsilon);
    rep.rows.push_back({std::to_string(x), "ebsb", format_g10(ebsb.lower),
                        format_g10(ebsb.upper),
                        format_g10(ebsb.upper - ebsb.lower)});
  }
  return rep;
}

SimReport validity_report(const SimConfig& config, int workers) {
  config.validate();
  const auto ranking = cached_ranking(config.theta0, config.epsilon);
  const auto counts = sample_histogram(config.theta0, config.n_samples,
                                       config.seed, 0, workers);

  SimReport rep;
  rep.metadata = {"# sim=validity",
                  "# theta0=" + format_g10(config.theta0),
                  "# n=" + std::to_string(config.n_samples),
                  "# seed=" + std::to_string(config.seed),
                  "# epsilon=" + format_g10(config.epsilon)};
  rep.columns = {"method", "theta0",  "n",     "worst_alpha",
                 "ecdf",   "excess",  "bound", "verdict"};

  const double n = static_cast<double>(config.n_samples);
  for (int mi = 0; mi < 3; ++mi) {
    const auto values =
        method_table(mi, *ranking, static_cast<int>(counts.size()) - 1);
    const auto ecdf = ecdf_on_grid(values, counts, config.alpha_grid,
                                   config.n_samples);
    bool pass = true;
    double worst_margin = -1e300;
    std::size_t worst = 0;
    for (std::size_t ai = 0; ai < config.alpha_grid.size(); ++ai) {
      const double alpha = config.alpha_grid[ai];
      const double excess = ecdf[ai] - alpha;
      const double bound = 3.0 * std::sqrt(alpha * (1.0 - alpha) / n);
      if (excess > bound) pass = false;
      if (excess - bound > worst_margin) {
        worst_margin = excess - bound;
        worst = ai;
      }
    }
    const double alpha = config.alpha_grid[worst];
    rep.rows.push_back({kMethods[mi], format_g10(config.theta0),
                        std::to_string(config.n_samples), format_g10(alpha),
                        format_g10(ecdf[worst]), format_g10(ecdf[worst] - alpha),
                        format_g10(3.0 * std::sqrt(alpha * (1.0 - alpha) / n)),
                        pass ? "pass" : "fail"});
  }
  return rep;
}

}  // namespace impois
