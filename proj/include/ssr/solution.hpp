#pragma once

#include <cstdint>
#include <vector>

#include "ssr/instance.hpp"
#include "ssr/ratio.hpp"

namespace ssr {

/// Sorted ascending, 0-based indices into the sorted instance.
using IndexSet = std::vector<int>;

struct SolutionPair {
  IndexSet s1;
  IndexSet s2;
  std::int64_t sum1 = 0;
  std::int64_t sum2 = 0;
  Ratio ratio = Ratio::infinity();

  bool empty() const { return s1.empty() && s2.empty(); }
  static SolutionPair none() { return SolutionPair{}; }
};

/// max(sum(s1)/sum(s2), sum(s2)/sum(s1)). Disjointness of s1 and s2 is the
/// caller's contract and is checked; empty or overlapping sets throw
/// std::invalid_argument, bad indices std::out_of_range.
Ratio max_ratio(const IndexSet& s1, const IndexSet& s2, const Instance& inst);

/// Builds a SolutionPair (sorted sets, sums, ratio) from two index sets.
SolutionPair evaluate_pair(const Instance& inst, IndexSet s1, IndexSet s2);

bool same_solution(const SolutionPair& a, const SolutionPair& b);

/// True when (a.s1, a.s2) precedes (b.s1, b.s2) lexicographically.
bool lex_before(const SolutionPair& a, const SolutionPair& b);

}  // namespace ssr
