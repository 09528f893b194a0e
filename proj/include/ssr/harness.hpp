#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssr/dp.hpp"
#include "ssr/fptas.hpp"
#include "ssr/ratio.hpp"
#include "ssr/wide.hpp"

namespace ssr {

struct VerifyConfig {
  int trials = 100;
  int n_min = 3;
  int n_max = 12;
  std::int64_t max_value = 1000;
  std::vector<std::string> epsilons = {"0.5", "0.1"};
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::uint64_t max_cells = kDefaultMaxCells;
};

/// Worst observed quotient achieved_ratio / optimum_ratio, tracked as an
/// exact 128-bit fraction.
struct QuotientStat {
  u128 num = 0;
  u128 den = 1;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_bad_trial;
};

struct VerifyOutcome {
  std::uint64_t trials = 0;
  QuotientStat exact;                    // must stay exactly 1
  std::vector<std::string> epsilon_texts;
  std::vector<QuotientStat> per_epsilon;  // parallel to epsilon_texts
  bool ok() const;
};

VerifyOutcome run_verify(const VerifyConfig& config);
std::string verify_table(const VerifyOutcome& outcome);

struct BenchConfig {
  std::vector<int> n_list = {20, 40, 80};
  std::vector<std::string> epsilon_list = {"0.4", "0.2", "0.1"};
  std::uint64_t seed = 1;
  int repeats = 3;
  std::int64_t max_value = 1000000;
  unsigned threads = 1;
  std::uint64_t max_cells = kDefaultMaxCells;
};

struct BenchRow {
  int n = 0;
  std::string epsilon;
  double median_ms = 0.0;
  std::uint64_t cells = 0;          // DP cells allocated across all p
  std::string predicted_cells;       // 9 n^4 / eps, rendered exactly
  Ratio ratio;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace ssr
