#include "ssr/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ssr/generator.hpp"
#include "ssr/oracle.hpp"
#include "ssr/semirestricted.hpp"

namespace ssr {

namespace {

struct TrialResult {
  bool exact_ok = false;
  u128 exact_qn = 1, exact_qd = 1;
  std::vector<bool> eps_ok;
  std::vector<std::array<u128, 2>> eps_q;
};

// quotient achieved/optimum as an exact u128 fraction
std::array<u128, 2> quotient(const Ratio& achieved, const Ratio& optimum) {
  return {u128(std::uint64_t(achieved.num())) * u128(std::uint64_t(optimum.den())),
          u128(std::uint64_t(achieved.den())) * u128(std::uint64_t(optimum.num()))};
}

void fold(QuotientStat& stat, bool ok, const std::array<u128, 2>& q,
          std::uint64_t trial) {
  if (!ok) {
    ++stat.violations;
    if (!stat.first_bad_trial) stat.first_bad_trial = trial;
  }
  if (compare_products(q[0], stat.den, stat.num, q[1]) > 0) {
    stat.num = q[0];
    stat.den = q[1];
  }
}

TrialResult run_trial(const VerifyConfig& config, const std::vector<Epsilon>& epsilons,
                      std::uint64_t trial) {
  std::mt19937_64 rng(config.seed + trial);
  int span = config.n_max - config.n_min + 1;
  int n = config.n_min + int(bounded_uniform(rng, std::uint64_t(span)));
  Instance inst = normalize_instance(
      generate_values(rng, n, config.max_value, /*distinct=*/false));

  SolutionPair oracle = brute_force_ssr(inst);
  SolutionPair exact = exact_ssr(inst, 1, config.max_cells);

  TrialResult result;
  result.exact_ok = ratio_equal(exact.ratio, oracle.ratio);
  auto eq = quotient(exact.ratio, oracle.ratio);
  result.exact_qn = eq[0];
  result.exact_qd = eq[1];

  for (const Epsilon& eps : epsilons) {
    SolutionPair apx = fptas_ssr(inst, eps, 1, config.max_cells);
    // apx <= (1 + eps) * optimum, cross-multiplied
    bool ok = compare_products(
                  u128(std::uint64_t(apx.ratio.num())) * u128(std::uint64_t(eps.den)),
                  u128(std::uint64_t(oracle.ratio.den())),
                  u128(std::uint64_t(apx.ratio.den())) *
                      u128(std::uint64_t(eps.den + eps.num)),
                  u128(std::uint64_t(oracle.ratio.num()))) <= 0;
    result.eps_ok.push_back(ok);
    result.eps_q.push_back(quotient(apx.ratio, oracle.ratio));
  }
  return result;
}

}  // namespace

bool VerifyOutcome::ok() const {
  if (exact.violations != 0) return false;
  for (const QuotientStat& s : per_epsilon) {
    if (s.violations != 0) return false;
  }
  return true;
}

VerifyOutcome run_verify(const VerifyConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be positive");
  if (config.n_min < 3 || config.n_max < config.n_min)
    throw std::invalid_argument("need 3 <= n-min <= n-max");
  if (config.n_max > kOracleMaxCount)
    throw std::invalid_argument("n-max above oracle bound " +
                                std::to_string(kOracleMaxCount));

  std::vector<Epsilon> epsilons;
  epsilons.reserve(config.epsilons.size());
  for (const std::string& text : config.epsilons) epsilons.push_back(parse_epsilon(text));
  if (epsilons.empty()) throw std::invalid_argument("at least one epsilon required");

  const std::uint64_t trials = std::uint64_t(config.trials);
  std::vector<TrialResult> results(trials);
  std::vector<std::exception_ptr> errors(trials);

  unsigned workers = config.threads == 0 ? std::thread::hardware_concurrency()
                                         : config.threads;
  if (workers == 0) workers = 1;
  workers = unsigned(std::min<std::uint64_t>(workers, trials));
  if (workers <= 1) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      try {
        results[t] = run_trial(config, epsilons, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t t = w; t < trials; t += workers) {
          try {
            results[t] = run_trial(config, epsilons, t);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (errors[t]) std::rethrow_exception(errors[t]);
  }

  VerifyOutcome outcome;
  outcome.trials = trials;
  outcome.epsilon_texts = config.epsilons;
  outcome.per_epsilon.assign(epsilons.size(), QuotientStat{});
  for (std::uint64_t t = 0; t < trials; ++t) {
    const TrialResult& r = results[t];
    fold(outcome.exact, r.exact_ok, {r.exact_qn, r.exact_qd}, t);
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
      fold(outcome.per_epsilon[e], r.eps_ok[e], r.eps_q[e], t);
    }
  }
  return outcome;
}

std::string verify_table(const VerifyOutcome& outcome) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "column" << std::setw(12) << "violations"
      << "worst_quotient\n";
  auto row = [&](const std::string& name, const QuotientStat& s) {
    out << std::left << std::setw(14) << name << std::setw(12) << s.violations
        << decimal_string(s.num, s.den);
    if (s.first_bad_trial) out << "  (first bad trial " << *s.first_bad_trial << ")";
    out << "\n";
  };
  row("exact", outcome.exact);
  for (std::size_t e = 0; e < outcome.per_epsilon.size(); ++e) {
    row("eps " + outcome.epsilon_texts[e], outcome.per_epsilon[e]);
  }
  out << "trials: " << outcome.trials << "\n";
  out << "result: " << (outcome.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.repeats < 1) throw std::invalid_argument("repeats must be positive");
  std::vector<BenchRow> rows;
  for (int n : config.n_list) {
    Instance inst = normalize_instance(
        generate_instance(n, config.max_value, config.seed + std::uint64_t(n), true));
    for (const std::string& eps_text : config.epsilon_list) {
      Epsilon eps = parse_epsilon(eps_text);
      BenchRow row;
      row.n = n;
      row.epsilon = eps_text;
      std::vector<double> times;
      std::uint64_t cells = 0;
      for (int rep = 0; rep < config.repeats; ++rep) {
        SolveStats stats;
        auto start = std::chrono::steady_clock::now();
        SolutionPair result =
            fptas_ssr(inst, eps, config.threads, config.max_cells, &stats);
        auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        if (rep == 0) {
          cells = stats.table_cells;
          row.ratio = result.ratio;
        } else if (cells != stats.table_cells) {
          throw std::logic_error("cell count varies across repeats");
        }
      }
      std::sort(times.begin(), times.end());
      row.median_ms = times[times.size() / 2];
      row.cells = cells;
      u128 n4 = u128(std::uint64_t(n)) * u128(std::uint64_t(n)) *
                u128(std::uint64_t(n)) * u128(std::uint64_t(n));
      row.predicted_cells =
          decimal_string(u128(9) * n4 * u128(std::uint64_t(eps.den)),
                         u128(std::uint64_t(eps.num)), 6);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "n" << std::setw(10) << "epsilon"
      << std::right << std::setw(12) << "median_ms" << std::setw(16) << "cells"
      << std::setw(16) << "model_9n4/eps" << "  ratio\n";
  for (const BenchRow& row : rows) {
    Ratio r = reduced(row.ratio);
    out << std::left << std::setw(6) << row.n << std::setw(10) << row.epsilon
        << std::right << std::setw(12) << std::fixed << std::setprecision(2)
        << row.median_ms << std::setw(16) << row.cells << std::setw(16)
        << row.predicted_cells << "  " << decimal_string(r) << " (" << r.num() << "/"
        << r.den() << ")\n";
  }
  return out.str();
}

}  // namespace ssr
