#pragma once

#include "ssr/instance.hpp"
#include "ssr/solution.hpp"

namespace ssr {

/// Exhaustive optimum over all disjoint nonempty pairs (3^n assignments).
/// Ties resolve to the lexicographically smallest (s1, s2). Only for
/// n <= kOracleMaxCount; beyond that throws std::invalid_argument.
SolutionPair brute_force_ssr(const Instance& inst);

/// Exhaustive optimum over pairs where sorted index p is the maximum of s1
/// and s2 contains at least one index greater than p. p is 0-based and must
/// satisfy 0 <= p <= n - 2.
SolutionPair brute_force_semi(const Instance& inst, int p);

}  // namespace ssr
