#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(IMPOIS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  const int rc = pclose(pipe);
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("one-sided subcommand") {
  const auto res = run_cli("one-sided --x 3 --theta0 2 --side greater");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "x,theta0,side,bel,pl");
  CHECK(lines[1] == "3,2,greater,0.6766764162,0.8571234605");
}

TEST_CASE("pl-point at the rank-one cell") {
  const auto res = run_cli("pl-point --x 7 --theta0 7");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "7,7,1");
}

TEST_CASE("interval subcommand") {
  const auto res = run_cli("interval --x 7 --alpha 0.1");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "x,alpha,lower,upper,contiguous");
  CHECK(lines[1].rfind("7,0.1,3.58911", 0) == 0);
  CHECK(lines[1].find("true") != std::string::npos);
}

TEST_CASE("ordering csv") {
  const auto res = run_cli("ordering --theta0 7 --eps 1e-10");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0] == "rank,x,t,v,T_r,V_r");
  CHECK(lines[1].rfind("1,7,0,-7,", 0) == 0);
  CHECK(lines[2].rfind("2,8,1,-6,", 0) == 0);
}

TEST_CASE("lambda-interval subcommand") {
  const auto res = run_cli("lambda-interval --x 0 --beta 15 --alpha 0.1");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "x,beta,alpha,lambda_lower,lambda_upper,conflict_mass");
  CHECK(lines[1].rfind("0,15,0.1,0,", 0) == 0);
  CHECK(lines[1].find("0.9999996") != std::string::npos);
}

TEST_CASE("pl-curve subcommand") {
  const auto res = run_cli("pl-curve --x 3 --theta-min 1 --theta-max 6 --n 11");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "theta,pl");
  // the grid hits theta = 3 where the curve peaks at 1
  bool saw_peak = false;
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i] == "3,1") saw_peak = true;
  CHECK(saw_peak);
}

TEST_CASE("argument errors exit with 2") {
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("interval --x 7").exit_code == 2);           // missing --alpha
  CHECK(run_cli("interval --x 7 --alpha 2").exit_code == 2); // domain error
  CHECK(run_cli("ordering --theta0 -3").exit_code == 2);
  CHECK(run_cli("pl-curve --x 1 --theta-min 5 --theta-max 2").exit_code == 2);
}

TEST_CASE("simulations are worker-invariant and honor --out") {
  const std::string base = "sim-plcdf --theta0 7 --theta 7 --n 5000 --seed 3";
  const auto serial = run_cli(base + " --workers 1");
  const auto parallel = run_cli(base + " --workers 4");
  CHECK(serial.exit_code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(serial.out.find("# seed=3") != std::string::npos);

  const std::string path = "/tmp/impois_cli_test_" + std::to_string(getpid()) + ".csv";
  const auto to_file = run_cli(base + " --workers 2 --out " + path);
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream file_content;
  file_content << in.rdbuf();
  CHECK(file_content.str() == serial.out);
  std::remove(path.c_str());
}

TEST_CASE("validity subcommand verdicts") {
  const auto res = run_cli("validity --theta0 7 --n 20000 --seed 42");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("method,theta0,n,worst_alpha,ecdf,excess,bound,verdict") !=
        std::string::npos);
  const auto lines = lines_of(res.out);
  bool im_pass = false;
  bool normal_fail = false;
  for (const auto& line : lines) {
    if (line.rfind("im,", 0) == 0 && line.find(",pass") != std::string::npos)
      im_pass = true;
    if (line.rfind("normal,", 0) == 0 && line.find(",fail") != std::string::npos)
      normal_fail = true;
  }
  CHECK(im_pass);
  CHECK(normal_fail);
}

TEST_CASE("sim-coverage and sim-width emit the documented schemas") {
  const auto cov = run_cli(
      "sim-coverage --beta 3 --alpha 0.1 --lambda-min 0 --lambda-max 0.3 "
      "--lambda-step 0.1 --n 2000 --seed 5");
  CHECK(cov.exit_code == 0);
  CHECK(cov.out.find("lambda,coverage,n") != std::string::npos);
  CHECK(lines_of(cov.out).size() >= 5);

  const auto width = run_cli("sim-width --beta 3 --alpha 0.1 --x-min 0 --x-max 2");
  CHECK(width.exit_code == 0);
  CHECK(width.out.find("x,method,lower,upper,width") != std::string::npos);
  CHECK(width.out.find(",ebsb,") != std::string::npos);
  CHECK(width.out.find(",im,") != std::string::npos);
}
