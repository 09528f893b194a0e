#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssr/instance.hpp"
#include "ssr/ratio.hpp"
#include "ssr/solution.hpp"

namespace ssr {

struct SetReport {
  std::vector<int> indices;    // 1-based sorted indices
  std::vector<int> positions;  // 1-based positions in the original input
  std::vector<std::int64_t> values;
  std::int64_t sum = 0;
};

/// Everything a solve emits. The JSON schema is identical across modes:
/// fields that do not apply are serialized as null rather than omitted.
struct RunReport {
  std::string mode;  // "fptas" | "exact" | "brute"
  int n = 0;
  std::optional<std::string> epsilon;
  Ratio ratio;  // exact; serialized reduced, with a 12-digit decimal
  SetReport s1;
  SetReport s2;
  std::optional<int> p_star;  // 1-based winning p
  std::optional<double> elapsed_ms;
  std::optional<std::uint64_t> table_cells;
};

SetReport make_set_report(const Instance& inst, const IndexSet& indices);

RunReport make_report(const std::string& mode, const Instance& inst,
                      const SolutionPair& pair,
                      std::optional<std::string> epsilon,
                      std::optional<int> p_star_zero_based,
                      std::optional<std::uint64_t> table_cells,
                      std::optional<double> elapsed_ms);

/// Compact single-line JSON, stable key order, trailing newline.
std::string report_json(const RunReport& report);

std::string report_text(const RunReport& report);

}  // namespace ssr
