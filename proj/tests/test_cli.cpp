#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_engine.hpp"

using humbert_cli::run_cli;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex flag parsing round-trips") {
  CHECK(humbert_cli::parse_complex("0.5") == std::complex<double>{0.5, 0});
  CHECK(humbert_cli::parse_complex("-1.25,3e-2") ==
        std::complex<double>{-1.25, 0.03});
  CHECK_THROWS_AS(humbert_cli::parse_complex("1;2"), std::invalid_argument);
  CHECK_THROWS_AS(humbert_cli::parse_complex("abc"), std::invalid_argument);
  // 17 significant digits round-trip doubles exactly
  double v = 0.1234567890123456789;
  CHECK(std::stod(humbert_cli::format_double(v)) == v);
}

TEST_CASE("eval subcommand: JSON fields and large-x dispatch") {
  auto r = cli({"eval", "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "-40",
                "--y", "1"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.contains("value_re"));
  CHECK(j.contains("value_im"));
  CHECK(j["regime"] == "large-x");
  CHECK(j.contains("err_est"));
  CHECK(j["err_est"].get<double>() >= 0.0);
}

TEST_CASE("eval subcommand: forced regime") {
  auto auto_r = cli({"eval", "--a", "0.5", "--b", "1", "--c", "1.5", "--x",
                     "0.3", "--y", "0.2"});
  auto forced = cli({"eval", "--a", "0.5", "--b", "1", "--c", "1.5", "--x",
                     "0.3", "--y", "0.2", "--regime", "taylor"});
  REQUIRE(auto_r.code == 0);
  REQUIRE(forced.code == 0);
  json j1 = json::parse(auto_r.out);
  json j2 = json::parse(forced.out);
  CHECK(j2["regime"] == "taylor");
  CHECK(std::abs(j1["value_re"].get<double>() -
                 j2["value_re"].get<double>()) < 1e-10);
}

TEST_CASE("glauber subcommand: arctan value at 2s/tau = 1") {
  auto r = cli({"glauber", "--s", "1", "--tau", "2", "--mu", "0"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(std::stod(r.out) - 0.5) < 1e-12);
}

TEST_CASE("check subcommand: agreement matrix with max delta") {
  auto r = cli({"check", "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "-20",
                "--y", "0.5"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.contains("max_delta"));
  CHECK(j["max_delta"].get<double>() <= 1e-7);
  CHECK(j.contains("agreement"));
  CHECK(j["agreement"].size() >= 1);
}

TEST_CASE("exit codes: usage and domain errors") {
  auto usage = cli({"eval", "--nonsense"});
  CHECK(usage.code == 64);
  auto usage2 = cli({"eval", "--a", "abc", "--x", "0", "--y", "0"});
  CHECK(usage2.code == 64);
  // x on the cut with no applicable regime: domain error, names regimes
  auto dom = cli({"eval", "--a", "2.6", "--b", "0.51", "--c", "1.5", "--x",
                  "3,0.5", "--y", "1"});
  CHECK(dom.code == 2);
  CHECK(dom.err.find("domain error") != std::string::npos);
  auto dom2 = cli({"eval", "--a", "0.5", "--b", "1", "--c", "-2", "--x", "0",
                   "--y", "0"});
  CHECK(dom2.code == 2);
}

TEST_CASE("vectors: deterministic golden file and round trip") {
  const std::string path1 = "/tmp/humbert_vectors_1.csv";
  const std::string path2 = "/tmp/humbert_vectors_2.csv";
  auto r1 = cli({"vectors", "--out", path1});
  auto r2 = cli({"vectors", "--out", path2});
  REQUIRE(r1.code == 0);
  REQUIRE(r2.code == 0);
  CHECK(r1.out.find("wrote 50 rows") != std::string::npos);

  auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  const std::string c1 = slurp(path1), c2 = slurp(path2);
  CHECK(!c1.empty());
  CHECK(c1 == c2);  // byte-identical re-run
  CHECK(c1.rfind("a_re,a_im,b_re,b_im,c_re,c_im,x_re,x_im,y_re,y_im,"
                 "value_re,value_im,method,err_est\n",
                 0) == 0);

  auto verify = cli({"check", "--from-file", path1});
  REQUIRE(verify.code == 0);
  json j = json::parse(verify.out);
  CHECK(j["rows"] == 50);
  CHECK(j["within_tolerance"] == true);

  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("vectors: empty grid writes a header-only file") {
  const std::string path = "/tmp/humbert_vectors_empty.csv";
  auto r = cli({"vectors", "--out", path, "--empty"});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line ==
        "a_re,a_im,b_re,b_im,c_re,c_im,x_re,x_im,y_re,y_im,value_re,value_im,"
        "method,err_est");
  CHECK(!std::getline(f, line));
  std::remove(path.c_str());
}

TEST_CASE("table subcommand: deterministic ordered csv") {
  auto r = cli({"table", "--a", "0.5", "--b", "1", "--c", "1.5", "--x0",
                "-0.4", "--x1", "0.4", "--nx", "3", "--y0", "0", "--y1", "1",
                "--ny", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto r2 = cli({"table", "--a", "0.5", "--b", "1", "--c", "1.5", "--x0",
                 "-0.4", "--x1", "0.4", "--nx", "3", "--y0", "0", "--y1", "1",
                 "--ny", "2", "--format", "csv"});
  CHECK(r.out == r2.out);
  // header + 6 rows
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 7);
}

TEST_CASE("fm and prabhakar subcommands") {
  auto fm = cli({"fm", "--x", "0.1", "--y", "0.1", "--z", "0.1"});
  REQUIRE(fm.code == 0);
  json j = json::parse(fm.out);
  CHECK(j["converged"] == true);

  auto pr = cli({"prabhakar", "--alpha", "0.5", "--beta", "0.5", "--gamma",
                 "1", "--lambda", "0.3", "--rho", "1", "--x", "0.5"});
  REQUIRE(pr.code == 0);
  json jp = json::parse(pr.out);
  CHECK(jp.contains("value_re"));
}

TEST_CASE("thresholds via environment file") {
  const std::string path = "/tmp/humbert_thresholds.txt";
  {
    std::ofstream f(path);
    f << "x_large=100\n";
  }
  setenv("HUMBERT_THRESHOLDS", path.c_str(), 1);
  auto r = cli({"eval", "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "-40",
                "--y", "1"});
  unsetenv("HUMBERT_THRESHOLDS");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["regime"] != "large-x");  // pushed out by the override
  std::remove(path.c_str());
}
