#include "doctest.h"
#include "ssr/wide.hpp"

using ssr::compare_products;
using ssr::decimal_string;
using ssr::u128;

namespace {

constexpr u128 pow2(int k) { return u128(1) << k; }

}  // namespace

TEST_CASE("product comparison near the 256-bit range") {
  // Expected signs confirmed with arbitrary-precision arithmetic.
  CHECK(compare_products((pow2(63) - 1) * (pow2(60) + 7), pow2(63) - 5,
                         (pow2(63) - 3) * (pow2(60) + 5), pow2(63) - 7) != 0);

  u128 a = (pow2(63) - 1) * (pow2(60) + 7);
  u128 b = (pow2(63) - 5) * (pow2(59) + 11);
  u128 c = (pow2(63) - 3) * (pow2(60) + 5);
  u128 d = (pow2(63) - 7) * (pow2(59) + 13);
  CHECK(compare_products(a, b, c, d) == -1);

  CHECK(compare_products(pow2(126) - 1, pow2(126) - 3, pow2(126) - 2,
                         pow2(126) - 2) == -1);

  u128 x1 = u128(123456789123456789ULL), y1 = u128(987654321987654321ULL);
  u128 x2 = u128(111111111111111111ULL), y2 = u128(999999999999999999ULL);
  CHECK(compare_products(x1, y1, x2, y2) == 1);
}

TEST_CASE("product comparison basics") {
  CHECK(compare_products(2, 3, 3, 2) == 0);
  CHECK(compare_products(0, 12345, 0, 1) == 0);
  CHECK(compare_products(1, 1, 1, 2) == -1);
  CHECK(compare_products(pow2(127), pow2(127), pow2(127), pow2(127) - 1) == 1);
  CHECK(compare_products(pow2(100) + 1, pow2(100) - 1, pow2(100), pow2(100)) == -1);
}

TEST_CASE("decimal rendering at 12 significant digits") {
  CHECK(decimal_string(9, 7) == "1.28571428571");
  CHECK(decimal_string(1, 1) == "1");
  CHECK(decimal_string(5, 4) == "1.25");
  CHECK(decimal_string(5, 3) == "1.66666666667");
  CHECK(decimal_string(pow2(40), 1) == "1099511627780");
  CHECK(decimal_string(10, 3) == "3.33333333333");
  CHECK(decimal_string(1, 3) == "0.333333333333");
  CHECK(decimal_string(1, 7) == "0.142857142857");
  CHECK(decimal_string(22, 7) == "3.14285714286");
  CHECK(decimal_string(999999999999ULL, 1) == "999999999999");
  CHECK(decimal_string(9999999999995ULL, 10) == "1000000000000");
  CHECK(decimal_string(1, 1000000) == "0.000001");
  CHECK(decimal_string(123456789, 100000) == "1234.56789");
  CHECK(decimal_string(2, 3) == "0.666666666667");
}

TEST_CASE("decimal rendering corner cases") {
  CHECK(decimal_string(0, 5) == "0");
  CHECK(decimal_string(7, 0) == "inf");
  CHECK(decimal_string(1, 2) == "0.5");
  CHECK(decimal_string(999999999999999ULL, 1000) == "1000000000000");
  CHECK(decimal_string(1, 1, 3) == "1");
  CHECK(decimal_string(2, 3, 3) == "0.667");
  CHECK(decimal_string(9999, 10, 3) == "1000");
  CHECK(decimal_string(99999, 100000, 3) == "1");
}

TEST_CASE("u128 to_string") {
  CHECK(ssr::to_string(0) == "0");
  CHECK(ssr::to_string(42) == "42");
  u128 big = pow2(127);
  CHECK(ssr::to_string(big) == "170141183460469231731687303715884105728");
}
