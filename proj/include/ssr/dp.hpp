#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ssr/instance.hpp"
#include "ssr/solution.hpp"

namespace ssr {

/// Thrown when a dynamic-programming table would exceed the configured
/// cell budget.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::uint64_t needed, std::uint64_t limit);
  std::uint64_t needed() const { return needed_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t needed_;
  std::uint64_t limit_;
};

inline constexpr std::uint64_t kDefaultMaxCells = 200'000'000;

/// Structural split of an instance around the forced maximum p (0-based):
/// q is the sum of the first p+1 values, below_count the number of values
/// strictly below q, and c_min the smallest index above p whose value is at
/// least q (the candidate partner for the one-vs-prefix solution).
struct CaseSplit {
  std::int64_t q = 0;
  int below_count = 0;
  std::optional<int> c_min;
};

CaseSplit split_cases(const Instance& inst, int p);

enum class BackKind : std::uint8_t {
  Empty = 0,
  Start,       // the seed cell ({p}, {})
  Skip,        // element not used; predecessor is the row above, same column
  AddS1,       // element joined s1; predecessor column is prev_off
  AddS2,       // element joined s2; predecessor is the row above
  AddS2FromP,  // element joined s2 directly from the row-p state
};

struct DpCell {
  std::int64_t total = 0;      // sum1 + sum2 of the retained pair
  std::int32_t prev_off = 0;   // predecessor column offset (Add* kinds)
  std::uint16_t elem = 0;      // element this transition consumed (Add* kinds)
  BackKind kind = BackKind::Empty;
};
static_assert(sizeof(DpCell) == 16);

/// Difference-indexed table over pairs whose first set is maximized by p.
/// Row r covers the first r small elements (sorted indices 0..r-1) plus the
/// tail extensions; column offsets map differences d = sum1 - sum2 in
/// [-2q, q] to [0, 3q]. Rows run 0..below_count.
class DpTable {
 public:
  /// Returns nullptr when the table degenerates (below_count <= p + 1),
  /// in which case only the one-vs-prefix solution applies for this p.
  static std::unique_ptr<DpTable> build(const Instance& inst, int p,
                                        std::uint64_t max_cells);

  int rows() const { return rows_; }
  std::int64_t q() const { return q_; }
  std::int64_t min_diff() const { return -2 * q_; }
  std::int64_t max_diff() const { return q_; }
  std::uint64_t cell_count() const { return cells_.size(); }

  bool occupied(int row, std::int64_t diff) const;
  const DpCell& cell(int row, std::int64_t diff) const;

  /// Walks backpointers from (row, diff) to the seed. Throws
  /// std::invalid_argument on an unoccupied cell.
  std::pair<IndexSet, IndexSet> reconstruct(int row, std::int64_t diff) const;

 private:
  DpTable(const Instance& inst, int p, CaseSplit split);
  void fill();
  DpCell& at(int row, std::int64_t off) { return cells_[std::size_t(row) * cols_ + std::size_t(off)]; }
  const DpCell& at(int row, std::int64_t off) const {
    return cells_[std::size_t(row) * cols_ + std::size_t(off)];
  }
  void put(int row, std::int64_t off, const DpCell& cand);

  const Instance* inst_;
  int p_;
  int rows_;
  std::int64_t q_;
  std::int64_t cols_;
  std::vector<DpCell> cells_;
};

}  // namespace ssr
