#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "gaudin/asymptotics.hpp"
#include "gaudin/cli.hpp"
#include "gaudin/errors.hpp"

using namespace gaudin;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the installed tool through the shell, capturing stdout.
Run run_tool(const std::string& args) {
  const std::string cmd = std::string(GAUDIN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) result.push_back(f);
  if (!line.empty() && line.back() == ',') result.emplace_back();
  return result;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 2.0, 1e-300, 6.02214076e23, -0.0}) {
    CHECK(std::stod(cli::format_double(v)) == v);
  }
  CHECK(cli::format_double(0.5) == "0.5");
}

TEST_CASE("sweep validation") {
  cli::SweepRequest req;
  req.min = 0.2;
  req.max = 0.1;
  CHECK_THROWS_AS(cli::validate(req), UsageError);
  req.min = -1;
  req.max = 1;
  CHECK_THROWS_AS(cli::validate(req), UsageError);
  req.min = 0.1;
  req.points = 1;
  CHECK_THROWS_AS(cli::validate(req), UsageError);
  req.points = 2;
  CHECK_NOTHROW(cli::validate(req));
}

TEST_CASE("sweep scales") {
  cli::SweepRequest req;
  req.min = 0.02;
  req.max = 0.2;
  req.points = 8;
  req.log_spaced = true;
  const auto s = cli::sweep_scales(req);
  REQUIRE(s.size() == 8);
  CHECK(s.front() == 0.02);
  CHECK(s.back() == 0.2);
  CHECK(s[1] / s[0] == doctest::Approx(s[7] / s[6]).epsilon(1e-12));
}

TEST_CASE("solve command") {
  const auto r = run_tool("solve --stat fermi --kappa 1000");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  for (const char* key : {"kappa", "r", "gamma", "Q", "energy", "err_estimate", "statistics"}) {
    CHECK(j.contains(key));
  }
  CHECK(std::abs(j["Q"].get<double>() - 2 / std::numbers::pi) <= 1e-3);

  const auto g = json::parse(run_tool("solve --stat fermi --gamma 0.1").out);
  CHECK(g["gamma"].get<double>() == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(std::abs(g["energy"].get<double>() - asym::energy_series(0.1, 2)) < 1e-3);

  CHECK(run_tool("solve --kappa -1").code == 2);
  CHECK(run_tool("solve --kappa 1 --gamma 1").code == 2);
  CHECK(run_tool("solve").code == 2);
  CHECK(run_tool("solve --stat boson --kappa 1").code == 2);
  CHECK(run_tool("solve --kappa 1 --nodes-per-panel 2").code == 2);
  CHECK(run_tool("--bogus").code == 2);
  CHECK(run_tool("--help").code == 0);
  // beyond the dense solver's range
  CHECK(run_tool("solve --kappa 1e-5").code == 1);
}

TEST_CASE("sweep output") {
  const std::string args = "sweep --stat fermi --min 0.02 --max 0.2 --points 8 --log";
  const auto first = run_tool(args);
  REQUIRE(first.code == 0);
  const auto rows = lines(first.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == cli::kCsvHeader);
  double prev_kappa = 0.0;
  double prev_q = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    REQUIRE(f.size() == 11);
    const double kappa = std::stod(f[0]);
    const double q = std::stod(f[3]);
    CHECK(kappa > prev_kappa);
    CHECK(q > prev_q);
    CHECK_FALSE(f[8].empty());
    prev_kappa = kappa;
    prev_q = q;
  }
  CHECK(run_tool(args).out == first.out);

  const auto j = run_tool(args + " --format json");
  REQUIRE(j.code == 0);
  const auto arr = json::parse(j.out);
  REQUIRE(arr.size() == 8);
  CHECK(arr[0]["kappa"].get<double>() == 0.02);
  CHECK(run_tool(args + " --format json").out == j.out);
}

TEST_CASE("sweep edge cases") {
  const auto two = run_tool("sweep --min 0.4999999 --max 0.5 --points 2");
  REQUIRE(two.code == 0);
  CHECK(lines(two.out).size() == 3);

  const auto bose = run_tool("sweep --stat bose --min 0.5 --max 2 --points 3");
  REQUIRE(bose.code == 0);
  for (std::size_t i = 1; i < 4; ++i) {
    const auto f = fields(lines(bose.out)[i]);
    REQUIRE(f.size() == 11);
    CHECK(f[8].empty());
    CHECK(f[9].empty());
    CHECK(f[10].empty());
  }

  const auto by_gamma = run_tool("sweep --scale gamma --min 0.1 --max 0.2 --points 2");
  REQUIRE(by_gamma.code == 0);
  CHECK(std::stod(fields(lines(by_gamma.out)[1])[2]) == doctest::Approx(0.1).epsilon(1e-9));

  CHECK(run_tool("sweep --min 0.1 --max 0.2 --points 2 --out /nonexistent/dir/out.csv").code == 1);
  CHECK(run_tool("sweep --min 0.2 --max 0.1").code == 2);
  CHECK(run_tool("sweep --min 0.1 --max 0.2 --format xml").code == 2);

  const auto path = std::filesystem::temp_directory_path() / "gaudin_sweep_test.csv";
  REQUIRE(run_tool("sweep --min 0.5 --max 1 --points 2 --out " + path.string()).code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == cli::kCsvHeader);
  std::filesystem::remove(path);
}

TEST_CASE("verify command") {
  const auto r = run_tool("verify --suite constants");
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["overall"].get<bool>());
  const auto w = run_tool("verify --suite wienerhopf");
  CHECK(w.code == 0);
  CHECK(run_tool("verify --suite nonsense").code == 2);

  std::ostringstream out, err;
  CHECK(cli::run_verify("nonsense", "", out, err) == cli::kUsage);
}
