#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string binary_path() {
  const char* env = std::getenv("QLCM_BIN");
  REQUIRE_MESSAGE(env != nullptr, "QLCM_BIN must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      binary_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) output.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// CSV rows with the wall-time column dropped (timings are not reproducible).
std::string strip_ms_column(const std::string& csv) {
  std::string out;
  for (const std::string& line : lines_of(csv)) {
    const auto cut = line.rfind(',');
    out += line.substr(0, cut);
    out += '\n';
  }
  return out;
}

} // namespace

TEST_CASE("constant command prints fraction and decimal") {
  CHECK(run("constant --quadratic 1,1,2,1 --window 1,0").output == "2 2\n");
  CHECK(run("constant --quadratic 1,2,3,1 --window 2,1").output == "4 4\n");
  CHECK(run("constant --quadratic 1,1,1,2 --window 1,0").output == "1 1\n");
  CHECK(run("constant --squared 3,1 --window 2,1").output == "36/5 7.2\n");
  CHECK(run("constant --linear 3,1 --window 2,1").output == "18/5 3.6\n");
  CHECK(run("constant --squared 1,1 --window 1,0").output == "2 2\n");
}

TEST_CASE("invalid parameters exit with code 2") {
  CHECK(run("constant --quadratic 2,2,3,1 --window 1,0").exit_code == 2);
  CHECK(run("constant --quadratic 1,1,2,2 --window 1,0").exit_code == 2);
  CHECK(run("constant --quadratic 1,1,2,1 --window 1,1").exit_code == 2);
  CHECK(run("constant --quadratic 1,1,2,1 --window 0,0").exit_code == 2);
  CHECK(run("constant --window 1,0").exit_code == 2);
  CHECK(run("constant --linear 3,1 --squared 3,1 --window 2,1").exit_code == 2);
  CHECK(run("converge --quadratic 1,1,2,1 --window 1,0 --n-grid 100,50").exit_code == 2);
  CHECK(run("converge --quadratic 1,1,2,1 --window 1,0").exit_code == 2);
  CHECK(run("verify nonsense").exit_code == 2);
  CHECK(run("bogus-command").exit_code == 2);

  const RunResult negative = run("constant --linear 3,-1 --window 2,1", true);
  CHECK(negative.exit_code == 2);
  CHECK(negative.output.find("negative b") != std::string::npos);
  const RunResult negative_quadratic = run("constant --quadratic 1,-1,2,1 --window 1,0", true);
  CHECK(negative_quadratic.exit_code == 2);
  CHECK(negative_quadratic.output.find("negative b") != std::string::npos);
}

TEST_CASE("resource ceilings exit with code 3") {
  CHECK(run("loglcm --quadratic 1,1,2,1 --window 1,0 --n 10 --sieve-ceiling 5").exit_code == 3);
  CHECK(run("verify oracle --samples 2 --seed 1 --oracle-ceiling 1").exit_code == 3);
}

TEST_CASE("loglcm prints the value and dumps valuations") {
  const RunResult r = run("loglcm --quadratic 1,1,2,1 --window 1,0 --n 3 --dump-valuations");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "6.04025471128"); // log 420
  CHECK(lines[1] == "2 2");
  CHECK(lines[2] == "3 1");
  CHECK(lines[3] == "5 1");
  CHECK(lines[4] == "7 1");
}

TEST_CASE("converge emits the fixed CSV schema with consistent rows") {
  const RunResult r = run("converge --quadratic 1,2,3,1 --window 2,1 --n-grid 50,400 --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "n,exact,An,ratio,estimate,ms");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long n = 0;
    double exact = 0, an = 0, ratio = 0, estimate = 0, ms = 0;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lld,%lf,%lf,%lf,%lf,%lf", &n, &exact, &an, &ratio,
                        &estimate, &ms) == 6);
    CHECK(an == doctest::Approx(4.0 * (double)n).epsilon(1e-11));
    // the 12-significant-digit printing bounds what a round-trip can preserve
    CHECK(ratio * an == doctest::Approx(exact).epsilon(1e-9));
    CHECK(exact > 0);
    CHECK(estimate > 0);
    CHECK(ms > 0);
  }
}

TEST_CASE("converge json mirrors the csv fields") {
  const RunResult r = run("converge --quadratic 1,1,2,1 --window 1,0 --n 100 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"n\":100") != std::string::npos);
  for (const char* key : {"\"exact\":", "\"An\":", "\"ratio\":", "\"estimate\":", "\"ms\":"})
    CHECK(r.output.find(key) != std::string::npos);
}

TEST_CASE("converge output is reproducible apart from wall times") {
  const std::string cmd = "converge --quadratic 2,1,3,2 --window 3,1 --n-grid 20,200";
  const RunResult first = run(cmd);
  const RunResult second = run(cmd);
  CHECK(first.exit_code == 0);
  CHECK(strip_ms_column(first.output) == strip_ms_column(second.output));
  // a worker pool must not change the emitted rows
  const RunResult parallel = run(cmd + " --workers 4");
  CHECK(strip_ms_column(parallel.output) == strip_ms_column(first.output));
}

TEST_CASE("verify suites pass and report") {
  const RunResult measure = run("verify measure --samples 200 --seed 42");
  CHECK(measure.exit_code == 0);
  CHECK(measure.output == "suite=measure samples=200 seed=42 result=pass\n");
  CHECK(run("verify decomposition --samples 200 --seed 42").exit_code == 0);
  CHECK(run("verify oracle --samples 5 --seed 9").exit_code == 0);
  CHECK(run("verify support --samples 2 --seed 3 --n 2000").exit_code == 0);
}

TEST_CASE("verify with zero samples warns and passes vacuously") {
  const RunResult r = run("verify measure --samples 0", true);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("warning") != std::string::npos);
  CHECK(r.output.find("result=pass") != std::string::npos);
}

TEST_CASE("config file feeds defaults and flags override it") {
  const std::string path = "/tmp/qlcm_test_config";
  {
    std::ofstream out(path);
    out << "# comment\nsieve_ceiling = 6\noracle_ceiling = 2\n";
  }
  // ceiling 6 from the file blocks the sieve
  CHECK(run("--config " + path + " loglcm --quadratic 1,1,2,1 --window 1,0 --n 3").exit_code == 3);
  // flag override restores room
  CHECK(run("--config " + path +
            " --sieve-ceiling 100000 loglcm --quadratic 1,1,2,1 --window 1,0 --n 3")
            .exit_code == 0);
  // same through the environment variable
  const std::string env_cmd = "QLCM_CONFIG=" + path + " " + binary_path() +
                              " loglcm --quadratic 1,1,2,1 --window 1,0 --n 3 2>/dev/null";
  FILE* pipe = popen(env_cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256];
  while (std::fread(buf, 1, sizeof(buf), pipe) > 0) {}
  CHECK(WEXITSTATUS(pclose(pipe)) == 3);

  {
    std::ofstream out(path);
    out << "unknown_key = 1\n";
  }
  CHECK(run("--config " + path + " constant --quadratic 1,1,2,1 --window 1,0").exit_code == 2);
  std::remove(path.c_str());
}
