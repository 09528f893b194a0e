#pragma once

#include <cstdint>
#include <string>

namespace ssr {

using u128 = unsigned __int128;

/// Sign of a*b - c*d computed in 256-bit integer arithmetic.
/// Every approximation-guarantee check in this library reduces to comparing
/// two products of 128-bit operands; keeping the comparison integral means
/// no decision path ever touches floating point.
int compare_products(u128 a, u128 b, u128 c, u128 d);

/// Plain decimal rendering of num/den at `significant` digits, round half up.
/// den == 0 renders as "inf". Display helper only; never used in comparisons.
std::string decimal_string(u128 num, u128 den, int significant = 12);

std::string to_string(u128 value);

}  // namespace ssr
