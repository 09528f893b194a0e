#include "ssr/solution.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssr {

namespace {

void check_disjoint_nonempty(const IndexSet& s1, const IndexSet& s2, int n) {
  if (s1.empty() || s2.empty()) throw std::invalid_argument("empty index set");
  std::vector<bool> seen(std::size_t(n), false);
  for (const IndexSet* s : {&s1, &s2}) {
    for (int i : *s) {
      if (i < 0 || i >= n) throw std::out_of_range("index " + std::to_string(i));
      if (seen[std::size_t(i)]) throw std::invalid_argument("sets overlap at index " + std::to_string(i));
      seen[std::size_t(i)] = true;
    }
  }
}

}  // namespace

Ratio max_ratio(const IndexSet& s1, const IndexSet& s2, const Instance& inst) {
  check_disjoint_nonempty(s1, s2, inst.size());
  return max_ratio_of_sums(inst.sum_of(s1), inst.sum_of(s2));
}

SolutionPair evaluate_pair(const Instance& inst, IndexSet s1, IndexSet s2) {
  check_disjoint_nonempty(s1, s2, inst.size());
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  SolutionPair out;
  out.sum1 = inst.sum_of(s1);
  out.sum2 = inst.sum_of(s2);
  out.ratio = max_ratio_of_sums(out.sum1, out.sum2);
  out.s1 = std::move(s1);
  out.s2 = std::move(s2);
  return out;
}

bool same_solution(const SolutionPair& a, const SolutionPair& b) {
  return a.s1 == b.s1 && a.s2 == b.s2;
}

bool lex_before(const SolutionPair& a, const SolutionPair& b) {
  if (a.s1 != b.s1) return a.s1 < b.s1;
  return a.s2 < b.s2;
}

}  // namespace ssr
