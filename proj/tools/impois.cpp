// impois -- inferential-model inference for the Poisson mean.
//
// Every subcommand emits CSV on stdout (or --out FILE).  Exit codes:
//   0  success
//   2  argument or domain error
//   3  the recursive ordering stopped (never observed in practice)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "impois/baselines.hpp"
#include "impois/constrained.hpp"
#include "impois/csv.hpp"
#include "impois/dist.hpp"
#include "impois/experiments.hpp"
#include "impois/im.hpp"
#include "impois/ordering.hpp"
#include "impois/two_sided.hpp"

namespace {

using impois::format_g10;

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << text;
  }
};

int default_workers() {
  if (const char* env = std::getenv("IMPOIS_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    line += cells[i];
    line += (i + 1 < cells.size()) ? ',' : '\n';
  }
  return line;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    g[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal inferential models for the Poisson mean"};
  app.require_subcommand(1);

  OutputTarget out;
  double eps = 1e-10;
  int workers = default_workers();

  // -- one-sided -------------------------------------------------------
  auto* cmd_one = app.add_subcommand("one-sided", "Closed-form one-sided belief/plausibility");
  int os_x = 0;
  double os_theta0 = 1.0;
  std::string os_side = "greater";
  cmd_one->add_option("--x", os_x, "Observed count")->required();
  cmd_one->add_option("--theta0", os_theta0, "Assertion boundary")->required();
  cmd_one->add_option("--side", os_side, "greater | less-equal")
      ->check(CLI::IsMember({"greater", "less-equal"}));
  cmd_one->add_option("--out", out.path, "Write CSV to file");

  // -- pl-point ---------------------------------------------------------
  auto* cmd_plp = app.add_subcommand("pl-point", "Point-assertion plausibility at theta0");
  int pp_x = 0;
  double pp_theta0 = 1.0;
  cmd_plp->add_option("--x", pp_x)->required();
  cmd_plp->add_option("--theta0", pp_theta0)->required();
  cmd_plp->add_option("--eps", eps, "Truncation tolerance");
  cmd_plp->add_option("--out", out.path);

  // -- pl-curve ---------------------------------------------------------
  auto* cmd_plc = app.add_subcommand("pl-curve", "Plausibility curve over a theta grid");
  int pc_x = 0;
  double pc_min = 0.1, pc_max = 20.0;
  int pc_n = 200;
  cmd_plc->add_option("--x", pc_x)->required();
  cmd_plc->add_option("--theta-min", pc_min)->required();
  cmd_plc->add_option("--theta-max", pc_max)->required();
  cmd_plc->add_option("--n", pc_n, "Grid points");
  cmd_plc->add_option("--eps", eps);
  cmd_plc->add_option("--workers", workers);
  cmd_plc->add_option("--out", out.path);

  // -- interval ---------------------------------------------------------
  auto* cmd_int = app.add_subcommand("interval", "Plausibility interval for theta");
  int iv_x = 0;
  double iv_alpha = 0.1;
  cmd_int->add_option("--x", iv_x)->required();
  cmd_int->add_option("--alpha", iv_alpha)->required();
  cmd_int->add_option("--eps", eps);
  cmd_int->add_option("--out", out.path);

  // -- ordering ---------------------------------------------------------
  auto* cmd_ord = app.add_subcommand("ordering", "Score-balanced ranking with diagnostics");
  double or_theta0 = 7.0;
  cmd_ord->add_option("--theta0", or_theta0)->required();
  cmd_ord->add_option("--eps", eps);
  cmd_ord->add_option("--out", out.path);

  // -- lambda-interval --------------------------------------------------
  auto* cmd_li = app.add_subcommand("lambda-interval",
                                    "EB-SB interval for the signal mean lambda");
  int li_x = 0;
  double li_beta = 1.0, li_alpha = 0.1;
  cmd_li->add_option("--x", li_x)->required();
  cmd_li->add_option("--beta", li_beta)->required();
  cmd_li->add_option("--alpha", li_alpha)->required();
  cmd_li->add_option("--eps", eps);
  cmd_li->add_option("--out", out.path);

  // -- sim-plcdf --------------------------------------------------------
  auto* cmd_sp = app.add_subcommand("sim-plcdf",
                                    "Monte Carlo CDF of the plausibility at theta0");
  impois::SimConfig sp_cfg;
  sp_cfg.alpha_grid = impois::SimConfig::default_alpha_grid();
  cmd_sp->add_option("--theta0", sp_cfg.theta0)->required();
  cmd_sp->add_option("--theta", sp_cfg.theta_true_list, "True theta (repeatable)")
      ->required();
  cmd_sp->add_option("--n", sp_cfg.n_samples, "Monte Carlo samples per theta");
  cmd_sp->add_option("--seed", sp_cfg.seed);
  cmd_sp->add_option("--eps", sp_cfg.epsilon);
  cmd_sp->add_option("--workers", workers);
  cmd_sp->add_option("--out", out.path);

  // -- sim-coverage -----------------------------------------------------
  auto* cmd_sc = app.add_subcommand("sim-coverage",
                                    "Empirical coverage of the EB-SB lambda interval");
  double sc_beta = 3.0, sc_alpha = 0.1;
  double sc_lmin = 0.0, sc_lmax = 4.0, sc_lstep = 0.1;
  long long sc_n = 20000;
  std::uint64_t sc_seed = 0;
  cmd_sc->add_option("--beta", sc_beta)->required();
  cmd_sc->add_option("--alpha", sc_alpha);
  cmd_sc->add_option("--lambda-min", sc_lmin);
  cmd_sc->add_option("--lambda-max", sc_lmax);
  cmd_sc->add_option("--lambda-step", sc_lstep);
  cmd_sc->add_option("--n", sc_n);
  cmd_sc->add_option("--seed", sc_seed);
  cmd_sc->add_option("--eps", eps);
  cmd_sc->add_option("--workers", workers);
  cmd_sc->add_option("--out", out.path);

  // -- sim-width --------------------------------------------------------
  auto* cmd_sw = app.add_subcommand("sim-width", "Interval width table per observed x");
  double sw_beta = 3.0, sw_alpha = 0.1;
  int sw_xmin = 0, sw_xmax = 30;
  cmd_sw->add_option("--beta", sw_beta)->required();
  cmd_sw->add_option("--alpha", sw_alpha);
  cmd_sw->add_option("--x-min", sw_xmin);
  cmd_sw->add_option("--x-max", sw_xmax);
  cmd_sw->add_option("--eps", eps);
  cmd_sw->add_option("--out", out.path);

  // -- validity ---------------------------------------------------------
  auto* cmd_v = app.add_subcommand("validity",
                                   "Pass/fail validity report per method at theta0");
  impois::SimConfig v_cfg;
  v_cfg.alpha_grid = impois::SimConfig::default_alpha_grid();
  cmd_v->add_option("--theta0", v_cfg.theta0)->required();
  cmd_v->add_option("--n", v_cfg.n_samples);
  cmd_v->add_option("--seed", v_cfg.seed);
  cmd_v->add_option("--eps", v_cfg.epsilon);
  cmd_v->add_option("--workers", workers);
  cmd_v->add_option("--out", out.path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    std::string text;
    if (cmd_one->parsed()) {
      const auto a = os_side == "greater" ? impois::Assertion::greater(os_theta0)
                                          : impois::Assertion::less_equal(os_theta0);
      const auto bp = impois::one_sided(os_x, a);
      text += "x,theta0,side,bel,pl\n";
      text += csv_line({std::to_string(os_x), format_g10(os_theta0), os_side,
                        format_g10(bp.belief), format_g10(bp.plausibility)});
    } else if (cmd_plp->parsed()) {
      const double pl = impois::point_plausibility(pp_x, pp_theta0, eps);
      text += "x,theta0,pl\n";
      text += csv_line({std::to_string(pp_x), format_g10(pp_theta0), format_g10(pl)});
    } else if (cmd_plc->parsed()) {
      if (pc_n < 2 || !(pc_min > 0.0) || !(pc_max > pc_min))
        throw std::invalid_argument("pl-curve: need 0 < theta-min < theta-max, n >= 2");
      const auto curve =
          impois::plausibility_curve(pc_x, linspace(pc_min, pc_max, pc_n), eps, workers);
      text += "theta,pl\n";
      for (std::size_t i = 0; i < curve.theta_grid.size(); ++i)
        text += csv_line({format_g10(curve.theta_grid[i]), format_g10(curve.values[i])});
    } else if (cmd_int->parsed()) {
      const auto iv = impois::plausibility_interval(iv_x, iv_alpha, eps);
      text += "x,alpha,lower,upper,contiguous\n";
      text += csv_line({std::to_string(iv.x), format_g10(iv.alpha),
                        format_g10(iv.lower), format_g10(iv.upper),
                        iv.contiguous ? "true" : "false"});
    } else if (cmd_ord->parsed()) {
      const auto ranking = impois::build_ranking(or_theta0, eps);
      const auto diag = impois::diagnostics(ranking);
      text += "rank,x,t,v,T_r,V_r\n";
      for (int i = 0; i < ranking.size(); ++i) {
        const int x = ranking.support[static_cast<std::size_t>(i)];
        const auto s = impois::score_pair(x, or_theta0);
        text += csv_line({std::to_string(i + 1), std::to_string(x),
                          format_g10(s.t), format_g10(s.v),
                          format_g10(diag.t[static_cast<std::size_t>(i)]),
                          format_g10(diag.v[static_cast<std::size_t>(i)])});
      }
    } else if (cmd_li->parsed()) {
      const auto iv = impois::lambda_interval(li_x, li_beta, li_alpha, eps);
      const double cm = impois::conflict_mass(li_x, li_beta, eps);
      text += "x,beta,alpha,lambda_lower,lambda_upper,conflict_mass\n";
      text += csv_line({std::to_string(li_x), format_g10(li_beta),
                        format_g10(li_alpha), format_g10(iv.lower),
                        format_g10(iv.upper), format_g10(cm)});
    } else if (cmd_sp->parsed()) {
      text = impois::pl_cdf_simulation(sp_cfg, workers).to_csv();
    } else if (cmd_sc->parsed()) {
      std::vector<double> lambdas;
      for (double l = sc_lmin; l <= sc_lmax + 1e-12; l += sc_lstep)
        lambdas.push_back(l);
      text = impois::coverage_simulation(sc_beta, lambdas, sc_alpha, sc_n, sc_seed,
                                         eps, workers)
                 .to_csv();
    } else if (cmd_sw->parsed()) {
      text = impois::width_table(sw_beta, sw_xmin, sw_xmax, sw_alpha, eps).to_csv();
    } else if (cmd_v->parsed()) {
      v_cfg.theta_true_list = {v_cfg.theta0};
      text = impois::validity_report(v_cfg, workers).to_csv();
    }
    out.write(text);
  } catch (const impois::OrderingStopped& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
