#include "ssr/ratio.hpp"

#include <numeric>
#include <stdexcept>

namespace ssr {

Ratio ratio_of(std::int64_t sum1, std::int64_t sum2) {
  if (sum1 < 0 || sum2 < 0) throw std::invalid_argument("negative sum in ratio");
  return Ratio(sum1, sum2);
}

Ordering compare_ratios(const Ratio& a, const Ratio& b) {
  if (a.infinite() || b.infinite()) {
    if (a.infinite() && b.infinite()) return Ordering::Equal;
    return a.infinite() ? Ordering::Greater : Ordering::Less;
  }
  u128 lhs = u128(std::uint64_t(a.num())) * u128(std::uint64_t(b.den()));
  u128 rhs = u128(std::uint64_t(b.num())) * u128(std::uint64_t(a.den()));
  if (lhs < rhs) return Ordering::Less;
  if (lhs > rhs) return Ordering::Greater;
  return Ordering::Equal;
}

bool ratio_less(const Ratio& a, const Ratio& b) {
  return compare_ratios(a, b) == Ordering::Less;
}

bool ratio_equal(const Ratio& a, const Ratio& b) {
  return compare_ratios(a, b) == Ordering::Equal;
}

Ratio max_ratio_of_sums(std::int64_t sum1, std::int64_t sum2) {
  Ratio forward = ratio_of(sum1, sum2);
  Ratio backward = ratio_of(sum2, sum1);
  return ratio_less(forward, backward) ? backward : forward;
}

Ratio reduced(const Ratio& r) {
  if (r.infinite()) return Ratio(1, 0);
  if (r.num() == 0) return Ratio(0, 1);
  std::int64_t g = std::gcd(r.num(), r.den());
  return Ratio(r.num() / g, r.den() / g);
}

std::string decimal_string(const Ratio& r, int significant) {
  if (r.infinite()) return "inf";
  return decimal_string(u128(std::uint64_t(r.num())), u128(std::uint64_t(r.den())),
                        significant);
}

}  // namespace ssr
