#include "ssr/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ssr {

Instance Instance::from_values(std::vector<std::int64_t> values) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw std::invalid_argument("instance needs at least 2 values");
  if (n > kMaxCount)
    throw std::invalid_argument("instance exceeds " + std::to_string(kMaxCount) +
                                " values");
  for (std::int64_t v : values) {
    if (v < 1) throw std::invalid_argument("non-positive entry " + std::to_string(v));
    if (v > kMaxValue)
      throw std::invalid_argument("entry " + std::to_string(v) + " exceeds bound " +
                                  std::to_string(kMaxValue));
  }
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[std::size_t(a)] < values[std::size_t(b)]; });
  Instance inst;
  inst.values_.reserve(values.size());
  inst.positions_ = std::move(order);
  for (int pos : inst.positions_) inst.values_.push_back(values[std::size_t(pos)]);
  return inst;
}

Instance Instance::from_sorted(std::vector<std::int64_t> values,
                               std::vector<int> positions) {
  if (values.size() != positions.size())
    throw std::invalid_argument("values/positions size mismatch");
  if (values.size() < 2) throw std::invalid_argument("instance needs at least 2 values");
  if (values.size() > std::size_t(kMaxCount))
    throw std::invalid_argument("instance exceeds " + std::to_string(kMaxCount) +
                                " values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw std::invalid_argument("negative entry");
    if (i > 0 && values[i] < values[i - 1])
      throw std::invalid_argument("values not sorted ascending");
  }
  Instance inst;
  inst.values_ = std::move(values);
  inst.positions_ = std::move(positions);
  return inst;
}

std::int64_t Instance::sum_of(const std::vector<int>& indices) const {
  std::int64_t sum = 0;
  for (int i : indices) {
    if (i < 0 || i >= size()) throw std::out_of_range("index " + std::to_string(i));
    if (__builtin_add_overflow(sum, values_[std::size_t(i)], &sum))
      throw std::overflow_error("set sum overflows");
  }
  return sum;
}

std::int64_t Instance::total() const {
  std::int64_t sum = 0;
  for (std::int64_t v : values_) {
    if (__builtin_add_overflow(sum, v, &sum))
      throw std::overflow_error("instance total overflows");
  }
  return sum;
}

int Instance::first_duplicate() const {
  for (int i = 0; i + 1 < size(); ++i) {
    if (values_[std::size_t(i)] == values_[std::size_t(i) + 1]) return i;
  }
  return -1;
}

Instance normalize_instance(const std::vector<std::int64_t>& raw) {
  return Instance::from_values(raw);
}

}  // namespace ssr
