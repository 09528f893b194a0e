#include "ssr/semirestricted.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>
#include <vector>

#include "ssr/ratio.hpp"

namespace ssr {

SolutionPair sol1(const Instance& inst, int p) {
  CaseSplit split = split_cases(inst, p);
  if (!split.c_min) return SolutionPair::none();
  IndexSet s1(std::size_t(p) + 1);
  std::iota(s1.begin(), s1.end(), 0);
  return evaluate_pair(inst, std::move(s1), IndexSet{*split.c_min});
}

SolutionPair sol2(const Instance& inst, int p, std::uint64_t max_cells,
                  SolveStats* stats) {
  auto table = DpTable::build(inst, p, max_cells);
  if (!table) return SolutionPair::none();
  if (stats) {
    stats->table_cells += table->cell_count();
    stats->tables_built += 1;
  }

  const int last = table->rows() - 1;
  Ratio best = Ratio::infinity();
  std::int64_t best_diff = 0;
  std::int64_t best_sum1 = 0, best_sum2 = 0;
  bool found = false;
  for (std::int64_t d = table->min_diff(); d <= table->max_diff(); ++d) {
    if (!table->occupied(last, d)) continue;
    std::int64_t x = table->cell(last, d).total;
    std::int64_t sum1 = (x + d) / 2;
    std::int64_t sum2 = (x - d) / 2;
    Ratio r = max_ratio_of_sums(sum1, sum2);
    if (!found || ratio_less(r, best)) {
      found = true;
      best = r;
      best_diff = d;
      best_sum1 = sum1;
      best_sum2 = sum2;
    }
  }
  if (!found) return SolutionPair::none();

  auto [s1, s2] = table->reconstruct(last, best_diff);
  SolutionPair out;
  out.s1 = std::move(s1);
  out.s2 = std::move(s2);
  out.sum1 = best_sum1;
  out.sum2 = best_sum2;
  out.ratio = best;
  return out;
}

SolutionPair sol_ex(const Instance& inst, int p, std::uint64_t max_cells,
                    SolveStats* stats) {
  SolutionPair first = sol1(inst, p);
  SolutionPair second = sol2(inst, p, max_cells, stats);
  if (first.empty()) return second;
  if (second.empty()) return first;
  return ratio_less(second.ratio, first.ratio) ? second : first;
}

namespace detail {

SolutionPair duplicate_shortcut(const Instance& inst) {
  int i = inst.first_duplicate();
  if (i < 0) return SolutionPair::none();
  return evaluate_pair(inst, IndexSet{i}, IndexSet{i + 1});
}

}  // namespace detail

SolutionPair exact_ssr(const Instance& inst, unsigned threads,
                       std::uint64_t max_cells, SolveStats* stats,
                       std::optional<int>* best_p) {
  if (inst.size() < 2) throw std::invalid_argument("instance needs at least 2 values");
  SolutionPair dup = detail::duplicate_shortcut(inst);
  if (!dup.empty()) {
    if (best_p) *best_p = dup.s1.front();
    return dup;
  }

  std::vector<SolveStats> per_p(std::size_t(inst.size() - 1));
  SolutionPair best = detail::best_over_p(
      inst, threads,
      [&](int p) { return sol_ex(inst, p, max_cells, stats ? &per_p[std::size_t(p)] : nullptr); },
      best_p);
  if (stats) {
    for (const SolveStats& s : per_p) {
      stats->table_cells += s.table_cells;
      stats->tables_built += s.tables_built;
    }
  }
  return best;
}

}  // namespace ssr
