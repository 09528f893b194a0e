#include "ssr/generator.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ssr/instance.hpp"

namespace ssr {

std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  if ((bound & (bound - 1)) == 0) return rng() & (bound - 1);
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  while (true) {
    std::uint64_t draw = rng() & mask;
    if (draw < bound) return draw;
  }
}

std::vector<std::int64_t> generate_values(std::mt19937_64& rng, int n,
                                          std::int64_t max_value, bool distinct) {
  if (n < 2) throw std::invalid_argument("need at least 2 values");
  if (n > kMaxCount)
    throw std::invalid_argument("n exceeds " + std::to_string(kMaxCount));
  if (max_value < 1 || max_value > kMaxValue)
    throw std::invalid_argument("max-value out of range");
  if (distinct && std::int64_t(n) > max_value)
    throw std::invalid_argument("cannot draw " + std::to_string(n) +
                                " distinct values from [1, " +
                                std::to_string(max_value) + "]");
  std::vector<std::int64_t> out;
  out.reserve(std::size_t(n));
  std::unordered_set<std::int64_t> used;
  while (int(out.size()) < n) {
    std::int64_t v = 1 + std::int64_t(bounded_uniform(rng, std::uint64_t(max_value)));
    if (distinct && !used.insert(v).second) continue;
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> generate_instance(int n, std::int64_t max_value,
                                            std::uint64_t seed, bool distinct) {
  std::mt19937_64 rng(seed);
  return generate_values(rng, n, max_value, distinct);
}

}  // namespace ssr
