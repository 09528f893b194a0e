#include "ssr/wide.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace ssr {

namespace {

struct U256 {
  std::uint64_t w[4] = {0, 0, 0, 0};  // little-endian limbs
};

U256 mul_128(u128 x, u128 y) {
  auto lo = [](u128 v) { return static_cast<std::uint64_t>(v); };
  std::uint64_t x0 = lo(x), x1 = lo(x >> 64);
  std::uint64_t y0 = lo(y), y1 = lo(y >> 64);
  u128 p00 = u128(x0) * y0;
  u128 p01 = u128(x0) * y1;
  u128 p10 = u128(x1) * y0;
  u128 p11 = u128(x1) * y1;
  U256 r;
  r.w[0] = lo(p00);
  u128 mid = (p00 >> 64) + lo(p01) + lo(p10);
  r.w[1] = lo(mid);
  u128 hi = (mid >> 64) + (p01 >> 64) + (p10 >> 64) + p11;
  r.w[2] = lo(hi);
  r.w[3] = lo(hi >> 64);
  return r;
}

int cmp_u256(const U256& a, const U256& b) {
  for (int i = 3; i >= 0; --i) {
    if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
  }
  return 0;
}

// x * 10 as a (hi, lo) 256-bit pair: 8x + 2x with carry.
void mul10(u128 x, u128& hi, u128& lo) {
  u128 lo8 = x << 3, lo2 = x << 1;
  lo = lo8 + lo2;
  hi = (x >> 125) + (x >> 127) + (lo < lo8 ? 1 : 0);
}

// Next digit of the fraction rem/den (rem < den), updating rem. The widened
// remainder rem*10 spans at most 132 bits, and its quotient by den is a
// single digit, so a subtract loop is exact and at most nine rounds.
int next_digit(u128& rem, u128 den) {
  u128 hi, lo;
  mul10(rem, hi, lo);
  int digit = 0;
  while (hi != 0 || lo >= den) {
    u128 nlo = lo - den;
    hi -= (lo < den) ? 1 : 0;
    lo = nlo;
    ++digit;
  }
  rem = lo;
  return digit;
}

bool round_up_half(u128 rem, u128 den) {
  // rem/den >= 1/2, written without forming 2*rem
  return rem >= den / 2 + den % 2;
}

u128 pow10_u128(int k) {
  u128 r = 1;
  while (k-- > 0) r *= 10;
  return r;
}

}  // namespace

int compare_products(u128 a, u128 b, u128 c, u128 d) {
  return cmp_u256(mul_128(a, b), mul_128(c, d));
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(char('0' + int(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string decimal_string(u128 num, u128 den, int significant) {
  if (den == 0) return "inf";
  if (num == 0) return "0";
  if (significant < 1) significant = 1;

  auto trim_fraction = [](std::string& frac) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  };

  if (num >= den) {
    u128 q = num / den;
    u128 rem = num % den;
    std::string qs = to_string(q);
    int ilen = static_cast<int>(qs.size());
    if (ilen >= significant) {
      // Round within the integer part at position `significant`.
      bool up;
      if (ilen == significant) {
        up = round_up_half(rem, den);
      } else {
        u128 unit = pow10_u128(ilen - significant);
        up = (q % unit) >= unit / 2;  // the true fraction can't bridge the gap
      }
      u128 prefix = (ilen == significant) ? q : q / pow10_u128(ilen - significant);
      if (up) prefix += 1;
      std::string digits = to_string(prefix);
      int pad = ilen - significant;
      if (static_cast<int>(digits.size()) > significant) {
        digits.pop_back();  // carry lengthened the prefix; last digit is 0
        pad += 1;
      }
      digits.append(std::size_t(pad), '0');
      return digits;
    }
    // ilen integer digits, the rest of the precision goes to the fraction.
    int fd = significant - ilen;
    std::string frac(std::size_t(fd), '0');
    for (int i = 0; i < fd; ++i) frac[std::size_t(i)] = char('0' + next_digit(rem, den));
    if (round_up_half(rem, den)) {
      int i = fd - 1;
      for (; i >= 0 && frac[std::size_t(i)] == '9'; --i) frac[std::size_t(i)] = '0';
      if (i >= 0) {
        frac[std::size_t(i)] += 1;
      } else {
        q += 1;
        frac.assign(std::size_t(fd), '0');
      }
    }
    trim_fraction(frac);
    std::string out = to_string(q);
    if (!frac.empty()) out += "." + frac;
    return out;
  }

  // Pure fraction: skip leading zeros, then emit `significant` digits.
  u128 rem = num;
  int zeros = 0;
  int first = 0;
  while ((first = next_digit(rem, den)) == 0) ++zeros;
  std::string digits(1, char('0' + first));
  for (int i = 1; i < significant; ++i) digits.push_back(char('0' + next_digit(rem, den)));
  if (round_up_half(rem, den)) {
    int i = significant - 1;
    for (; i >= 0 && digits[std::size_t(i)] == '9'; --i) digits[std::size_t(i)] = '0';
    if (i >= 0) {
      digits[std::size_t(i)] += 1;
    } else {
      if (zeros == 0) return "1";  // 0.99999... rounded all the way up
      zeros -= 1;
      digits[0] = '1';
    }
  }
  trim_fraction(digits);
  std::string out = "0.";
  out.append(std::size_t(zeros), '0');
  out += digits;
  return out;
}

}  // namespace ssr
