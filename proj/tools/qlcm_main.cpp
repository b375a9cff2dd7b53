#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qlcm/config.hpp"
#include "qlcm/constants.hpp"
#include "qlcm/errors.hpp"
#include "qlcm/intervals.hpp"
#include "qlcm/lcm.hpp"
#include "qlcm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInvalidParameters = 2;
constexpr int kExitResourceCeiling = 3;

struct ConvergenceRow {
  std::int64_t n;
  double exact;
  double constant_times_n;
  double ratio;
  double estimate;
  double wall_ms;
};

qlcm::ProgressionPair parse_quadratic(const std::vector<std::int64_t>& v) {
  if (v.size() != 4)
    throw std::invalid_argument("--quadratic expects a1,b1,a2,b2");
  if (v[1] < 0 || v[3] < 0)
    throw std::invalid_argument(
        "negative b is not supported: the progression offsets b_i must be positive");
  return {v[0], v[1], v[2], v[3]};
}

void check_linear_args(const std::vector<std::int64_t>& v) {
  if (v.size() != 2) throw std::invalid_argument("expected a,b");
  if (v[1] < 0)
    throw std::invalid_argument(
        "negative b is not supported: the progression offset b must be nonnegative");
}

qlcm::Window parse_window(const std::vector<std::int64_t>& v) {
  if (v.size() != 2) throw std::invalid_argument("--window expects l,m");
  return {v[0], v[1]};
}

void print_constant(const qlcm::BigRational& value) {
  std::printf("%s %s\n", qlcm::to_fraction_string(value).c_str(),
              qlcm::to_decimal_string(value).c_str());
}

ConvergenceRow compute_row(const qlcm::ProgressionPair& pair, const qlcm::Window& window,
                           std::int64_t n, const qlcm::BigRational& constant,
                           const qlcm::SieveConfig& sieve) {
  const auto start = std::chrono::steady_clock::now();
  const double exact = qlcm::exact_log_lcm(pair, window, n, sieve).log_value;
  const double estimate = qlcm::theta_log_lcm_estimate(pair, window, n, sieve);
  const auto stop = std::chrono::steady_clock::now();
  const double an = (constant * n).convert_to<double>();
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return {n, exact, an, exact / an, estimate, ms};
}

void emit_rows_csv(const std::vector<ConvergenceRow>& rows) {
  std::printf("n,exact,An,ratio,estimate,ms\n");
  for (const auto& row : rows)
    std::printf("%lld,%.12g,%.12g,%.12g,%.12g,%.3f\n", (long long)row.n, row.exact,
                row.constant_times_n, row.ratio, row.estimate, row.wall_ms);
}

void emit_rows_json(const std::vector<ConvergenceRow>& rows) {
  std::printf("[\n");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    std::printf("  {\"n\":%lld,\"exact\":%.12g,\"An\":%.12g,\"ratio\":%.12g,"
                "\"estimate\":%.12g,\"ms\":%.3f}%s\n",
                (long long)row.n, row.exact, row.constant_times_n, row.ratio, row.estimate,
                row.wall_ms, i + 1 < rows.size() ? "," : "");
  }
  std::printf("]\n");
}

int run_verify(const std::string& suite, std::optional<std::uint64_t> samples_opt,
               std::uint64_t seed, std::int64_t n, std::int64_t max_n,
               const qlcm::RunConfig& cfg) {
  std::uint64_t samples = 0;
  qlcm::SuiteOutcome outcome;
  if (suite == "measure") {
    samples = samples_opt.value_or(1000);
    outcome = qlcm::verify_measure(samples, seed);
  } else if (suite == "decomposition") {
    samples = samples_opt.value_or(1000);
    outcome = qlcm::verify_decomposition(samples, seed);
  } else if (suite == "support") {
    samples = samples_opt.value_or(20);
    outcome = qlcm::verify_support(samples, seed, n, cfg.sieve);
  } else if (suite == "oracle") {
    samples = samples_opt.value_or(50);
    outcome = qlcm::verify_oracle(samples, seed, max_n, cfg.oracle_ceiling, cfg.sieve);
  } else {
    std::fprintf(stderr, "unknown verify suite: %s (expected measure, decomposition, "
                         "support or oracle)\n",
                 suite.c_str());
    return kExitInvalidParameters;
  }

  if (samples == 0)
    std::fprintf(stderr, "warning: 0 samples requested, result is vacuous\n");
  if (outcome.passed) {
    std::printf("suite=%s samples=%llu seed=%llu result=pass\n", suite.c_str(),
                (unsigned long long)outcome.samples, (unsigned long long)seed);
    return kExitOk;
  }
  std::printf("suite=%s samples=%llu seed=%llu result=FAIL\n", suite.c_str(),
              (unsigned long long)outcome.samples, (unsigned long long)seed);
  std::printf("counterexample: %s\n", outcome.counterexample.c_str());
  return kExitCounterexample;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymptotic constants and exact log-lcm for reducible quadratic progressions"};
  app.require_subcommand(1);
  app.fallthrough(); // global options may follow the subcommand

  std::string config_path;
  std::optional<std::uint64_t> sieve_ceiling;
  std::optional<std::uint64_t> segment_size;
  std::optional<std::int64_t> oracle_ceiling;
  std::optional<int> workers;
  app.add_option("--config", config_path, "key=value config file (default: $QLCM_CONFIG)");
  app.add_option("--sieve-ceiling", sieve_ceiling, "largest value the sieve may reach");
  app.add_option("--segment-size", segment_size, "odd-entry count per sieve segment");
  app.add_option("--oracle-ceiling", oracle_ceiling, "largest n for the big-integer oracle");
  app.add_option("--workers", workers, "parallel workers for convergence rows");

  std::vector<std::int64_t> quadratic, linear, squared, window_args, n_grid;
  std::int64_t single_n = 0;

  auto* cmd_constant = app.add_subcommand("constant", "print the asymptotic constant");
  cmd_constant->add_option("--quadratic", quadratic, "a1,b1,a2,b2")->delimiter(',');
  cmd_constant->add_option("--linear", linear, "a,b")->delimiter(',');
  cmd_constant->add_option("--squared", squared, "a,b")->delimiter(',');
  cmd_constant->add_option("--window", window_args, "l,m")->delimiter(',')->required();

  auto* cmd_converge = app.add_subcommand("converge", "tabulate log lcm against A*n");
  cmd_converge->add_option("--quadratic", quadratic, "a1,b1,a2,b2")->delimiter(',')->required();
  cmd_converge->add_option("--window", window_args, "l,m")->delimiter(',')->required();
  cmd_converge->add_option("--n", single_n, "single index scale");
  cmd_converge->add_option("--n-grid", n_grid, "ascending index scales")->delimiter(',');
  std::string format = "csv";
  cmd_converge->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* cmd_verify = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 42;
  std::int64_t support_n = 10'000;
  std::int64_t oracle_max_n = 200;
  cmd_verify->add_option("suite", suite, "measure | decomposition | support | oracle")
      ->required();
  cmd_verify->add_option("--samples", samples, "random tuples to draw");
  cmd_verify->add_option("--seed", seed, "RNG seed");
  cmd_verify->add_option("--n", support_n, "index scale for the support suite");
  cmd_verify->add_option("--max-n", oracle_max_n, "largest n for the oracle suite");

  auto* cmd_loglcm = app.add_subcommand("loglcm", "exact log lcm over one window");
  bool dump_valuations = false;
  cmd_loglcm->add_option("--quadratic", quadratic, "a1,b1,a2,b2")->delimiter(',')->required();
  cmd_loglcm->add_option("--window", window_args, "l,m")->delimiter(',')->required();
  cmd_loglcm->add_option("--n", single_n, "index scale")->required();
  cmd_loglcm->add_flag("--dump-valuations", dump_valuations, "print 'p v_p' lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidParameters;
  }

  try {
    qlcm::RunConfig cfg;
    if (config_path.empty())
      if (const char* env = std::getenv("QLCM_CONFIG")) config_path = env;
    if (!config_path.empty()) cfg = qlcm::load_config_file(config_path, cfg);
    if (sieve_ceiling) cfg.sieve.ceiling = *sieve_ceiling;
    if (segment_size) cfg.sieve.segment_entries = *segment_size;
    if (oracle_ceiling) cfg.oracle_ceiling = *oracle_ceiling;
    if (workers) cfg.workers = *workers;
    if (cfg.workers < 1 || cfg.sieve.segment_entries < 1)
      throw std::invalid_argument("workers and segment size must be positive");

    if (app.got_subcommand(cmd_constant)) {
      const qlcm::Window window = parse_window(window_args);
      const int selected = (!quadratic.empty()) + (!linear.empty()) + (!squared.empty());
      if (selected != 1)
        throw std::invalid_argument("pass exactly one of --quadratic, --linear, --squared");
      if (!quadratic.empty()) {
        print_constant(qlcm::asymptotic_constant(parse_quadratic(quadratic), window));
      } else if (!linear.empty()) {
        check_linear_args(linear);
        print_constant(qlcm::linear_constant(linear[0], linear[1], window));
      } else {
        check_linear_args(squared);
        print_constant(qlcm::squared_constant(squared[0], squared[1], window));
      }
      return kExitOk;
    }

    if (app.got_subcommand(cmd_converge)) {
      const qlcm::ProgressionPair pair = parse_quadratic(quadratic);
      const qlcm::Window window = parse_window(window_args);
      std::vector<std::int64_t> grid = n_grid;
      if (single_n > 0) grid.push_back(single_n);
      if (grid.empty()) throw std::invalid_argument("pass --n or --n-grid");
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 1) throw std::invalid_argument("index scales must be positive");
        if (i > 0 && grid[i] <= grid[i - 1])
          throw std::invalid_argument("--n-grid must be strictly ascending");
      }
      const qlcm::BigRational constant = qlcm::asymptotic_constant(pair, window);

      std::vector<ConvergenceRow> rows(grid.size());
      if (cfg.workers > 1) {
        std::vector<std::future<ConvergenceRow>> futures;
        futures.reserve(grid.size());
        for (const std::int64_t n : grid)
          futures.push_back(std::async(std::launch::async, compute_row, pair, window, n,
                                       constant, cfg.sieve));
        for (std::size_t i = 0; i < futures.size(); ++i) rows[i] = futures[i].get();
      } else {
        for (std::size_t i = 0; i < grid.size(); ++i)
          rows[i] = compute_row(pair, window, grid[i], constant, cfg.sieve);
      }
      if (format == "csv")
        emit_rows_csv(rows);
      else
        emit_rows_json(rows);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_verify))
      return run_verify(suite, samples, seed, support_n, oracle_max_n, cfg);

    if (app.got_subcommand(cmd_loglcm)) {
      const qlcm::ProgressionPair pair = parse_quadratic(quadratic);
      const qlcm::Window window = parse_window(window_args);
      if (single_n < 1) throw std::invalid_argument("--n must be positive");
      const auto result = qlcm::exact_log_lcm(pair, window, single_n, cfg.sieve);
      std::printf("%.12g\n", result.log_value);
      if (dump_valuations) std::fputs(qlcm::format_valuations(result.valuations).c_str(), stdout);
      return kExitOk;
    }
  } catch (const qlcm::ResourceLimitError& e) {
    std::fprintf(stderr, "resource limit: %s\n", e.what());
    return kExitResourceCeiling;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return kExitInvalidParameters;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCounterexample;
  }
  return kExitOk;
}
