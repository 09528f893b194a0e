#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ssr/generator.hpp"
#include "ssr/instance.hpp"

using namespace ssr;

TEST_CASE("bounded_uniform stays in range and is deterministic") {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t bound = 1 + (i % 97);
    std::uint64_t x = bounded_uniform(a, bound);
    CHECK(x < bound);
    CHECK(x == bounded_uniform(b, bound));
  }
  CHECK_THROWS_AS(bounded_uniform(a, 0), std::invalid_argument);
}

TEST_CASE("bounded_uniform covers the full range") {
  std::mt19937_64 rng(5);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(bounded_uniform(rng, 7));
  CHECK(seen.size() == 7);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 6);
}

TEST_CASE("same seed, same instance") {
  auto a = generate_instance(5, 100, 42, true);
  auto b = generate_instance(5, 100, 42, true);
  CHECK(a == b);
  auto c = generate_instance(5, 100, 43, true);
  CHECK(a != c);  // overwhelmingly likely, and fixed for these seeds
}

TEST_CASE("distinct mode has no repeats") {
  auto values = generate_instance(50, 60, 7, true);
  std::set<std::int64_t> unique(values.begin(), values.end());
  CHECK(unique.size() == values.size());
  for (std::int64_t v : values) {
    CHECK(v >= 1);
    CHECK(v <= 60);
  }
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(generate_instance(101, 100, 1, true), std::invalid_argument);
  CHECK_NOTHROW(generate_instance(100, 100, 1, true));
  CHECK_NOTHROW(generate_instance(101, 100, 1, false));
  CHECK_THROWS_AS(generate_instance(1, 100, 1, true), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(2, 0, 1, true), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(2, kMaxValue + 1, 1, false),
                  std::invalid_argument);
}
