#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssr/fptas.hpp"
#include "ssr/generator.hpp"
#include "ssr/harness.hpp"
#include "ssr/io.hpp"
#include "ssr/oracle.hpp"
#include "ssr/report.hpp"
#include "ssr/semirestricted.hpp"

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_max_cells() {
  const char* env = std::getenv("SSR_MAX_CELLS");
  if (env == nullptr || *env == '\0') return ssr::kDefaultMaxCells;
  char* end = nullptr;
  errno = 0;
  unsigned long long parsed = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0' || parsed == 0)
    throw UsageError("invalid SSR_MAX_CELLS value: " + std::string(env));
  return parsed;
}

ssr::Instance read_instance(const std::string& path) {
  if (path == "-") return ssr::parse_instance_stream(std::cin);
  return ssr::load_instance(path);
}

struct SolveArgs {
  std::string input = "-";
  std::string mode;
  std::string epsilon;
  int p = 0;  // 1-based; 0 means "all p"
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t max_cells = 0;
  bool timing = false;
};

int cmd_solve(const SolveArgs& args) {
  if (args.mode == "fptas" && args.epsilon.empty())
    throw UsageError("--epsilon is required when --mode fptas");
  if (args.mode != "fptas" && !args.epsilon.empty())
    throw UsageError("--epsilon only applies to --mode fptas");

  ssr::Epsilon eps;
  if (args.mode == "fptas") {
    try {
      eps = ssr::parse_epsilon(args.epsilon);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  ssr::Instance inst = read_instance(args.input);
  if (args.mode == "brute" && inst.size() > ssr::kOracleMaxCount)
    throw UsageError("brute mode supports n <= " +
                     std::to_string(ssr::kOracleMaxCount) + ", got n = " +
                     std::to_string(inst.size()));
  int p0 = -1;
  if (args.p != 0) {
    if (args.p < 1 || args.p > inst.size() - 1)
      throw UsageError("--p must be in [1, " + std::to_string(inst.size() - 1) + "]");
    p0 = args.p - 1;
  }

  ssr::SolveStats stats;
  std::optional<int> best_p;
  ssr::SolutionPair pair;
  auto start = std::chrono::steady_clock::now();
  if (args.mode == "brute") {
    pair = (p0 >= 0) ? ssr::brute_force_semi(inst, p0) : ssr::brute_force_ssr(inst);
    if (p0 >= 0) best_p = p0;
  } else if (args.mode == "exact") {
    if (p0 >= 0) {
      pair = ssr::sol_ex(inst, p0, args.max_cells, &stats);
      best_p = p0;
    } else {
      pair = ssr::exact_ssr(inst, args.threads, args.max_cells, &stats, &best_p);
    }
  } else {
    if (p0 >= 0) {
      pair = ssr::sol_apx(inst, p0, eps, args.max_cells, &stats);
      best_p = p0;
    } else {
      pair = ssr::fptas_ssr(inst, eps, args.threads, args.max_cells, &stats, &best_p);
    }
  }
  auto stop = std::chrono::steady_clock::now();
  double elapsed = std::chrono::duration<double, std::milli>(stop - start).count();

  if (pair.empty()) throw std::runtime_error("no feasible pair found");

  std::optional<std::string> eps_text;
  if (args.mode == "fptas") eps_text = args.epsilon;
  std::optional<std::uint64_t> cells;
  if (args.mode != "brute") cells = stats.table_cells;
  std::optional<double> elapsed_out;
  if (args.timing) elapsed_out = elapsed;

  ssr::RunReport report =
      ssr::make_report(args.mode, inst, pair, eps_text, best_p, cells, elapsed_out);
  if (args.format == "json") {
    std::cout << ssr::report_json(report);
  } else {
    std::cout << ssr::report_text(report);
    if (!args.timing) {
      // text mode always shows the measurement; it is not part of the
      // machine-readable contract
      std::cout << "elapsed_ms: " << elapsed << "\n";
    }
  }
  return 0;
}

struct GenArgs {
  int n = 0;
  std::int64_t max_value = 1000;
  std::uint64_t seed = 1;
  bool distinct = true;
  std::string output = "-";
};

int cmd_gen(const GenArgs& args) {
  std::vector<std::int64_t> values;
  try {
    values = ssr::generate_instance(args.n, args.max_value, args.seed, args.distinct);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string text = ssr::format_values(values);
  if (args.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + args.output);
    out << text;
  }
  return 0;
}

int cmd_verify(const ssr::VerifyConfig& config) {
  ssr::VerifyOutcome outcome;
  try {
    outcome = ssr::run_verify(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << ssr::verify_table(outcome);
  return outcome.ok() ? 0 : 1;
}

int cmd_bench(const ssr::BenchConfig& config) {
  std::vector<ssr::BenchRow> rows;
  try {
    rows = ssr::run_bench(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << ssr::bench_table(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset-sums ratio solver: exact and approximate"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  GenArgs gen_args;
  ssr::VerifyConfig verify_config;
  verify_config.trials = 200;
  ssr::BenchConfig bench_config;

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--input", solve_args.input, "Instance file, '-' for stdin");
  solve->add_option("--mode", solve_args.mode, "Solver")
      ->required()
      ->check(CLI::IsMember({"fptas", "exact", "brute"}));
  solve->add_option("--epsilon", solve_args.epsilon, "Approximation parameter");
  solve->add_option("--p", solve_args.p,
                    "Fix the 1-based sorted position of the first set's maximum");
  solve->add_option("--format", solve_args.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  solve->add_option("--threads", solve_args.threads, "Worker threads (0 = hardware)");
  solve->add_option("--max-cells", solve_args.max_cells, "DP cell budget");
  solve->add_flag("--timing", solve_args.timing, "Include elapsed_ms in JSON output");

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_args.n, "Number of values")->required();
  gen->add_option("--max-value", gen_args.max_value, "Largest value");
  gen->add_option("--seed", gen_args.seed, "PRNG seed");
  gen->add_option("--distinct", gen_args.distinct, "Sample without replacement");
  gen->add_option("--output", gen_args.output, "Output file, '-' for stdout");

  CLI::App* verify = app.add_subcommand("verify", "Check solvers against the oracle");
  verify->add_option("--trials", verify_config.trials, "Random trials");
  verify->add_option("--n-min", verify_config.n_min, "Smallest n");
  verify->add_option("--n-max", verify_config.n_max, "Largest n (<= 16)");
  verify->add_option("--max-value", verify_config.max_value, "Largest value");
  verify->add_option("--epsilons", verify_config.epsilons, "Epsilon list")
      ->delimiter(',');
  verify->add_option("--seed", verify_config.seed, "Base seed");
  verify->add_option("--threads", verify_config.threads, "Worker threads");
  verify->add_option("--max-cells", verify_config.max_cells, "DP cell budget");

  CLI::App* bench = app.add_subcommand("bench", "Time the approximation solver");
  bench->add_option("--n-list", bench_config.n_list, "Instance sizes")->delimiter(',');
  bench->add_option("--epsilon-list", bench_config.epsilon_list, "Epsilons")
      ->delimiter(',');
  bench->add_option("--seed", bench_config.seed, "Base seed");
  bench->add_option("--repeats", bench_config.repeats, "Repetitions per cell");
  bench->add_option("--max-value", bench_config.max_value, "Largest value");
  bench->add_option("--threads", bench_config.threads, "Worker threads");
  bench->add_option("--max-cells", bench_config.max_cells, "DP cell budget");

  try {
    std::uint64_t cells = default_max_cells();
    solve_args.max_cells = cells;
    verify_config.max_cells = cells;
    bench_config.max_cells = cells;

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int rc = app.exit(e);
      return rc == 0 ? 0 : 2;
    }

    if (solve->parsed()) return cmd_solve(solve_args);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (verify->parsed()) return cmd_verify(verify_config);
    if (bench->parsed()) return cmd_bench(bench_config);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
