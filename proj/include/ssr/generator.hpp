#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ssr {

/// Uniform draw from [0, bound) by rejection: take 64-bit words from the
/// engine, mask to the smallest covering power of two, retry on overshoot.
/// Unlike std::uniform_int_distribution this consumes a reproducible word
/// sequence on every platform.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound);

/// n values uniform in [1, max_value] from an engine the caller seeds.
/// With distinct = true, repeats are redrawn (requires n <= max_value).
std::vector<std::int64_t> generate_values(std::mt19937_64& rng, int n,
                                          std::int64_t max_value,
                                          bool distinct);

/// Convenience wrapper: engine seeded with `seed` via mt19937_64(seed).
std::vector<std::int64_t> generate_instance(int n, std::int64_t max_value,
                                            std::uint64_t seed, bool distinct);

}  // namespace ssr
