#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "ssr/dp.hpp"
#include "ssr/instance.hpp"
#include "ssr/ratio.hpp"
#include "ssr/solution.hpp"

namespace ssr {

/// Counters a solve can fill in for reporting; all optional.
struct SolveStats {
  std::uint64_t table_cells = 0;  // cells allocated across all tables built
  int tables_built = 0;
};

/// One-vs-prefix candidate for position p: s1 = {0..p}, s2 = {c_min}.
/// Empty when no index above p reaches the prefix sum.
SolutionPair sol1(const Instance& inst, int p);

/// Dynamic-programming candidate for position p: best pair over the final
/// table row. Empty when the table degenerates.
SolutionPair sol2(const Instance& inst, int p,
                  std::uint64_t max_cells = kDefaultMaxCells,
                  SolveStats* stats = nullptr);

/// Exact optimum among pairs whose first set is maximized by p and whose
/// second set reaches above p: min(sol1, sol2), sol1 winning ties.
SolutionPair sol_ex(const Instance& inst, int p,
                    std::uint64_t max_cells = kDefaultMaxCells,
                    SolveStats* stats = nullptr);

/// Exact optimum over all p. Equal values at adjacent sorted indices short-
/// circuit to the ratio-1 singleton pair. `threads` == 0 means one worker
/// per hardware thread; results are merged in ascending p regardless of
/// scheduling, so the outcome is deterministic.
SolutionPair exact_ssr(const Instance& inst, unsigned threads = 1,
                       std::uint64_t max_cells = kDefaultMaxCells,
                       SolveStats* stats = nullptr,
                       std::optional<int>* best_p = nullptr);

namespace detail {

/// ({i}, {i+1}) for the first adjacent equal pair, or none.
SolutionPair duplicate_shortcut(const Instance& inst);

/// Runs solve(p) for every p in [0, n-2] on `threads` workers and merges in
/// ascending p with strict improvement, so the result does not depend on
/// scheduling.
template <typename Solve>
SolutionPair best_over_p(const Instance& inst, unsigned threads, Solve solve,
                         std::optional<int>* best_p) {
  const int count = inst.size() - 1;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, unsigned(count));

  std::vector<SolutionPair> results(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  if (threads <= 1) {
    for (int p = 0; p < count; ++p) {
      try {
        results[std::size_t(p)] = solve(p);
      } catch (...) {
        errors[std::size_t(p)] = std::current_exception();
      }
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&results, &errors, &solve, count, threads, w] {
        for (int p = int(w); p < count; p += int(threads)) {
          try {
            results[std::size_t(p)] = solve(p);
          } catch (...) {
            errors[std::size_t(p)] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  for (int p = 0; p < count; ++p) {
    if (errors[std::size_t(p)]) std::rethrow_exception(errors[std::size_t(p)]);
  }

  SolutionPair best = SolutionPair::none();
  for (int p = 0; p < count; ++p) {
    const SolutionPair& cand = results[std::size_t(p)];
    if (cand.empty()) continue;
    if (best.empty() || ratio_less(cand.ratio, best.ratio)) {
      best = cand;
      if (best_p) *best_p = p;
    }
  }
  return best;
}

}  // namespace detail

}  // namespace ssr
