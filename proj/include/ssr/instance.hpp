#pragma once

#include <cstdint>
#include <vector>

namespace ssr {

inline constexpr std::int64_t kMaxValue = std::int64_t(1) << 40;
inline constexpr std::int64_t kMaxScaledValue = std::int64_t(1) << 61;
inline constexpr int kMaxCount = 10000;
inline constexpr int kOracleMaxCount = 16;

/// A multiset of positive integers, sorted ascending. `position(i)` maps the
/// sorted index i back to the 0-based position of that value in the input it
/// was built from, so solutions can be reported against the original order.
class Instance {
 public:
  /// Validates, sorts (stable), and records original positions.
  static Instance from_values(std::vector<std::int64_t> values);

  /// Wraps values that are already sorted ascending; `positions[i]` is the
  /// input position of `values[i]`. Zero values are allowed here (scaled
  /// instances may contain them); from_values rejects them.
  static Instance from_sorted(std::vector<std::int64_t> values,
                              std::vector<int> positions);

  int size() const { return static_cast<int>(values_.size()); }
  std::int64_t value(int i) const { return values_[i]; }
  int position(int i) const { return positions_[i]; }
  const std::vector<std::int64_t>& values() const { return values_; }
  const std::vector<int>& positions() const { return positions_; }

  /// Sum over sorted indices; throws std::out_of_range on a bad index and
  /// std::overflow_error if the sum leaves the 63-bit range.
  std::int64_t sum_of(const std::vector<int>& indices) const;

  std::int64_t total() const;

  /// Smallest sorted index i with values[i] == values[i+1], or -1.
  int first_duplicate() const;

 private:
  std::vector<std::int64_t> values_;
  std::vector<int> positions_;
};

/// from_values with the documented input validation: n in [2, kMaxCount],
/// every value in [1, kMaxValue].
Instance normalize_instance(const std::vector<std::int64_t>& raw);

}  // namespace ssr
