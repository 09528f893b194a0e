#pragma once

#include <cstdint>
#include <string>

#include "ssr/wide.hpp"

namespace ssr {

enum class Ordering { Less, Equal, Greater };

/// Nonnegative rational with the convention that a zero denominator means
/// positive infinity. Stored unreduced; comparisons cross-multiply in 128-bit
/// arithmetic, so no reduction or floating point is ever needed.
class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  static constexpr Ratio infinity() { return Ratio(1, 0); }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool infinite() const { return den_ == 0; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Ratio of two set sums: sum1/sum2, infinite when sum2 == 0.
Ratio ratio_of(std::int64_t sum1, std::int64_t sum2);

/// Exact order of two ratios. Infinity compares greater than every finite
/// ratio and equal to itself.
Ordering compare_ratios(const Ratio& a, const Ratio& b);

bool ratio_less(const Ratio& a, const Ratio& b);
bool ratio_equal(const Ratio& a, const Ratio& b);

/// max(sum1/sum2, sum2/sum1) -- the quantity every solver minimizes.
Ratio max_ratio_of_sums(std::int64_t sum1, std::int64_t sum2);

/// Reduced copy (gcd of numerator and denominator divided out).
Ratio reduced(const Ratio& r);

std::string decimal_string(const Ratio& r, int significant = 12);

}  // namespace ssr
