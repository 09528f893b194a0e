#include "ssr/dp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

namespace ssr {

ResourceLimitError::ResourceLimitError(std::uint64_t needed, std::uint64_t limit)
    : std::runtime_error("table needs " + std::to_string(needed) +
                         " cells, limit is " + std::to_string(limit)),
      needed_(needed),
      limit_(limit) {}

CaseSplit split_cases(const Instance& inst, int p) {
  const int n = inst.size();
  if (n < 2) throw std::invalid_argument("instance needs at least 2 values");
  if (p < 0 || p > n - 2)
    throw std::invalid_argument("p out of range: " + std::to_string(p));
  u128 acc = 0;
  for (int i = 0; i <= p; ++i) acc += u128(std::uint64_t(inst.value(i)));
  if (acc > u128(std::uint64_t(std::numeric_limits<std::int64_t>::max())))
    throw std::overflow_error("prefix sum overflows");
  CaseSplit split;
  split.q = std::int64_t(std::uint64_t(acc));
  const auto& values = inst.values();
  split.below_count = int(std::lower_bound(values.begin(), values.end(), split.q) -
                          values.begin());
  int c = std::max(split.below_count, p + 1);
  if (c < n) split.c_min = c;
  return split;
}

DpTable::DpTable(const Instance& inst, int p, CaseSplit split)
    : inst_(&inst),
      p_(p),
      rows_(split.below_count + 1),
      q_(split.q),
      cols_(3 * split.q + 1) {}

std::unique_ptr<DpTable> DpTable::build(const Instance& inst, int p,
                                        std::uint64_t max_cells) {
  CaseSplit split = split_cases(inst, p);
  if (split.below_count < p + 2) return nullptr;
  if (split.q > (std::numeric_limits<std::int64_t>::max() - 1) / 3)
    throw ResourceLimitError(std::numeric_limits<std::uint64_t>::max(), max_cells);
  u128 needed = u128(std::uint64_t(split.below_count + 1)) *
                u128(std::uint64_t(3 * split.q + 1));
  if (needed > max_cells)
    throw ResourceLimitError(std::uint64_t(std::min<u128>(
                                 needed, std::numeric_limits<std::uint64_t>::max())),
                             max_cells);
  // prev_off is 32-bit; any budget that admits wider tables is refused.
  if (3 * split.q + 1 > std::numeric_limits<std::int32_t>::max())
    throw ResourceLimitError(std::uint64_t(needed), max_cells);

  auto table = std::unique_ptr<DpTable>(new DpTable(inst, p, split));
  table->cells_.assign(std::size_t(table->rows_) * std::size_t(table->cols_), DpCell{});
  table->fill();
  return table;
}

void DpTable::put(int row, std::int64_t off, const DpCell& cand) {
  assert(off >= 0 && off < cols_);
  DpCell& cur = at(row, off);
  if (cur.kind == BackKind::Empty || cand.total > cur.total) cur = cand;
}

void DpTable::fill() {
  const Instance& inst = *inst_;
  const std::int64_t q = q_;

  DpCell seed;
  seed.total = inst.value(p_);
  seed.prev_off = 0;
  seed.elem = std::uint16_t(p_);
  seed.kind = BackKind::Start;
  put(0, inst.value(p_) + 2 * q, seed);

  for (int r = 1; r < rows_; ++r) {
    const int e = r - 1;  // sorted index this row consumes
    const std::int64_t v = inst.value(e);
    if (r <= p_) {
      for (std::int64_t off = 0; off < cols_; ++off) {
        const DpCell& prev = at(r - 1, off);
        if (prev.kind == BackKind::Empty) continue;
        put(r, off, DpCell{prev.total, 0, 0, BackKind::Skip});
        // Below row p every first set stays inside the prefix, so both
        // shifted columns are in range by construction.
        put(r, off + v,
            DpCell{prev.total + v, std::int32_t(off), std::uint16_t(e), BackKind::AddS1});
        put(r, off - v,
            DpCell{prev.total + v, std::int32_t(off), std::uint16_t(e), BackKind::AddS2});
      }
    } else if (r == p_ + 1) {
      for (std::int64_t off = 0; off < cols_; ++off) {
        const DpCell& prev = at(r - 1, off);
        if (prev.kind == BackKind::Empty) continue;
        put(r, off, DpCell{prev.total, 0, 0, BackKind::Skip});
      }
    } else {
      const bool propagate = r > p_ + 2;
      for (std::int64_t off = 0; off < cols_; ++off) {
        const DpCell& prev = at(r - 1, off);
        if (prev.kind == BackKind::Empty) continue;
        if (propagate) put(r, off, DpCell{prev.total, 0, 0, BackKind::Skip});
        if (off - v >= 0)
          put(r, off - v,
              DpCell{prev.total + v, std::int32_t(off), std::uint16_t(e), BackKind::AddS2});
      }
      for (std::int64_t off = 0; off < cols_; ++off) {
        const DpCell& base = at(p_ + 1, off);
        if (base.kind == BackKind::Empty) continue;
        if (off - v >= 0)
          put(r, off - v, DpCell{base.total + v, std::int32_t(off), std::uint16_t(e),
                                 BackKind::AddS2FromP});
      }
    }
  }
}

bool DpTable::occupied(int row, std::int64_t diff) const {
  if (row < 0 || row >= rows_) return false;
  std::int64_t off = diff + 2 * q_;
  if (off < 0 || off >= cols_) return false;
  return at(row, off).kind != BackKind::Empty;
}

const DpCell& DpTable::cell(int row, std::int64_t diff) const {
  if (!occupied(row, diff)) throw std::invalid_argument("empty table cell");
  return at(row, diff + 2 * q_);
}

std::pair<IndexSet, IndexSet> DpTable::reconstruct(int row, std::int64_t diff) const {
  if (!occupied(row, diff)) throw std::invalid_argument("empty table cell");
  IndexSet s1, s2;
  int r = row;
  std::int64_t off = diff + 2 * q_;
  while (true) {
    const DpCell& c = at(r, off);
    if (c.kind == BackKind::Start) {
      s1.push_back(p_);
      break;
    }
    switch (c.kind) {
      case BackKind::Skip:
        r -= 1;
        break;
      case BackKind::AddS1:
        s1.push_back(int(c.elem));
        off = c.prev_off;
        r -= 1;
        break;
      case BackKind::AddS2:
        s2.push_back(int(c.elem));
        off = c.prev_off;
        r -= 1;
        break;
      case BackKind::AddS2FromP:
        s2.push_back(int(c.elem));
        off = c.prev_off;
        r = p_ + 1;
        break;
      default:
        throw std::logic_error("broken backpointer chain");
    }
  }
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  return {std::move(s1), std::move(s2)};
}

}  // namespace ssr
