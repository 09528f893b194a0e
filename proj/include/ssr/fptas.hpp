#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ssr/instance.hpp"
#include "ssr/semirestricted.hpp"
#include "ssr/solution.hpp"

namespace ssr {

/// Approximation parameter as an exact rational in (0, 1).
struct Epsilon {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// Accepts "0.25"-style decimals (at most 9 fractional digits) and "1/4"
/// fractions. Must land strictly inside (0, 1); throws std::invalid_argument
/// otherwise.
Epsilon parse_epsilon(const std::string& text);

std::string epsilon_string(const Epsilon& eps);

/// Instance with every value divided by delta = eps * a_p / (3n) and floored,
/// computed in exact integer arithmetic. Positions carry over unchanged.
class ScaledInstance {
 public:
  ScaledInstance(Instance scaled, u128 delta_num, u128 delta_den)
      : scaled_(std::move(scaled)), delta_num_(delta_num), delta_den_(delta_den) {}

  const Instance& instance() const { return scaled_; }
  u128 delta_num() const { return delta_num_; }
  u128 delta_den() const { return delta_den_; }

 private:
  Instance scaled_;
  u128 delta_num_;
  u128 delta_den_;
};

/// Floors each value through the scale factor for position p. Throws
/// std::overflow_error if a scaled value would exceed kMaxScaledValue.
ScaledInstance scale_instance(const Instance& inst, int p, const Epsilon& eps);

/// Approximate optimum for position p: exact solve on the scaled instance,
/// chosen sets re-evaluated against the original values.
SolutionPair sol_apx(const Instance& inst, int p, const Epsilon& eps,
                     std::uint64_t max_cells = kDefaultMaxCells,
                     SolveStats* stats = nullptr);

/// Full approximation over all p; same duplicate short-circuit and
/// deterministic merge as exact_ssr.
SolutionPair fptas_ssr(const Instance& inst, const Epsilon& eps,
                       unsigned threads = 1,
                       std::uint64_t max_cells = kDefaultMaxCells,
                       SolveStats* stats = nullptr,
                       std::optional<int>* best_p = nullptr);

}  // namespace ssr
