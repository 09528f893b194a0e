#include "ssr/fptas.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ssr/ratio.hpp"

namespace ssr {

namespace {

constexpr std::int64_t kMaxEpsilonDen = 1'000'000'000;  // nine decimal digits

std::int64_t parse_digits(const std::string& text, const char* what) {
  if (text.empty()) throw std::invalid_argument(std::string("empty ") + what);
  std::int64_t out = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("bad digit in ") + what + ": " + text);
    if (out > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10)
      throw std::invalid_argument(std::string(what) + " too large: " + text);
    out = out * 10 + (c - '0');
  }
  return out;
}

}  // namespace

Epsilon parse_epsilon(const std::string& text) {
  Epsilon eps;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    eps.num = parse_digits(text.substr(0, slash), "epsilon numerator");
    eps.den = parse_digits(text.substr(slash + 1), "epsilon denominator");
  } else {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      // A bare integer can only be 0 or >= 1, both outside (0,1).
      parse_digits(text, "epsilon");
      throw std::invalid_argument("epsilon must be in (0,1): " + text);
    }
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (!whole.empty() && parse_digits(whole, "epsilon") != 0)
      throw std::invalid_argument("epsilon must be in (0,1): " + text);
    if (frac.empty()) throw std::invalid_argument("epsilon has no fractional digits: " + text);
    if (frac.size() > 9)
      throw std::invalid_argument("epsilon supports at most 9 fractional digits: " + text);
    eps.num = parse_digits(frac, "epsilon");
    eps.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) eps.den *= 10;
  }
  if (eps.den > kMaxEpsilonDen)
    throw std::invalid_argument("epsilon denominator above 1e9: " + text);
  if (eps.num <= 0 || eps.num >= eps.den)
    throw std::invalid_argument("epsilon must be in (0,1): " + text);
  return eps;
}

std::string epsilon_string(const Epsilon& eps) {
  return std::to_string(eps.num) + "/" + std::to_string(eps.den);
}

ScaledInstance scale_instance(const Instance& inst, int p, const Epsilon& eps) {
  const int n = inst.size();
  if (p < 0 || p > n - 2)
    throw std::invalid_argument("p out of range: " + std::to_string(p));
  if (eps.num <= 0 || eps.den <= 0 || eps.num >= eps.den)
    throw std::invalid_argument("epsilon must be in (0,1)");
  if (eps.den > kMaxEpsilonDen)
    throw std::invalid_argument("epsilon denominator above 1e9");
  if (inst.value(p) <= 0) throw std::invalid_argument("pivot value must be positive");

  // delta = eps * a_p / (3n); a'_i = floor(a_i / delta), all in integers.
  const u128 delta_num = u128(std::uint64_t(eps.num)) * u128(std::uint64_t(inst.value(p)));
  const u128 delta_den = u128(3) * u128(std::uint64_t(n)) * u128(std::uint64_t(eps.den));

  std::vector<std::int64_t> scaled(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    u128 t = (u128(std::uint64_t(inst.value(i))) * delta_den) / delta_num;
    if (t > u128(std::uint64_t(kMaxScaledValue)))
      throw std::overflow_error("scaled value exceeds bound; use a larger epsilon");
    scaled[std::size_t(i)] = std::int64_t(std::uint64_t(t));
  }

  // Prefix bound: sum of the first p+1 scaled values is at most 3n^2/eps.
  std::int64_t prefix = 0;
  for (int i = 0; i <= p; ++i) {
    if (__builtin_add_overflow(prefix, scaled[std::size_t(i)], &prefix))
      throw std::logic_error("scaled prefix sum overflows");
  }
  u128 lhs = u128(std::uint64_t(prefix)) * u128(std::uint64_t(eps.num));
  u128 rhs = u128(3) * u128(std::uint64_t(n)) * u128(std::uint64_t(n)) *
             u128(std::uint64_t(eps.den));
  if (lhs > rhs) throw std::logic_error("scaled prefix bound violated");

  return ScaledInstance(Instance::from_sorted(std::move(scaled), inst.positions()),
                        delta_num, delta_den);
}

SolutionPair sol_apx(const Instance& inst, int p, const Epsilon& eps,
                     std::uint64_t max_cells, SolveStats* stats) {
  ScaledInstance scaled = scale_instance(inst, p, eps);
  SolutionPair chosen = sol_ex(scaled.instance(), p, max_cells, stats);
  if (chosen.empty()) return chosen;
  return evaluate_pair(inst, std::move(chosen.s1), std::move(chosen.s2));
}

SolutionPair fptas_ssr(const Instance& inst, const Epsilon& eps, unsigned threads,
                       std::uint64_t max_cells, SolveStats* stats,
                       std::optional<int>* best_p) {
  if (inst.size() < 2) throw std::invalid_argument("instance needs at least 2 values");
  SolutionPair dup = detail::duplicate_shortcut(inst);
  if (!dup.empty()) {
    if (best_p) *best_p = dup.s1.front();
    return dup;
  }

  std::vector<SolveStats> per_p(std::size_t(inst.size() - 1));
  SolutionPair best = detail::best_over_p(
      inst, threads,
      [&](int p) { return sol_apx(inst, p, eps, max_cells, stats ? &per_p[std::size_t(p)] : nullptr); },
      best_p);
  if (stats) {
    for (const SolveStats& s : per_p) {
      stats->table_cells += s.table_cells;
      stats->tables_built += s.tables_built;
    }
  }
  return best;
}

}  // namespace ssr
