#include "ssr/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ssr/ratio.hpp"

namespace ssr {

namespace {

void check_oracle_size(const Instance& inst) {
  if (inst.size() > kOracleMaxCount)
    throw std::invalid_argument("brute force limited to n <= " +
                                std::to_string(kOracleMaxCount));
}

// Assignment codes: 0 unused, 1 in s1, 2 in s2.
struct Search {
  const Instance& inst;
  std::vector<std::int8_t> assign;
  bool have = false;
  SolutionPair best;

  explicit Search(const Instance& i) : inst(i), assign(std::size_t(i.size()), 0) {}

  SolutionPair materialize(std::int64_t sum1, std::int64_t sum2) const {
    SolutionPair out;
    for (int i = 0; i < inst.size(); ++i) {
      if (assign[std::size_t(i)] == 1) out.s1.push_back(i);
      if (assign[std::size_t(i)] == 2) out.s2.push_back(i);
    }
    out.sum1 = sum1;
    out.sum2 = sum2;
    out.ratio = max_ratio_of_sums(sum1, sum2);
    return out;
  }

  void offer(std::int64_t sum1, std::int64_t sum2) {
    Ratio r = max_ratio_of_sums(sum1, sum2);
    if (have) {
      Ordering ord = compare_ratios(r, best.ratio);
      if (ord == Ordering::Greater) return;
      if (ord == Ordering::Equal) {
        SolutionPair cand = materialize(sum1, sum2);
        if (lex_before(cand, best)) best = std::move(cand);
        return;
      }
    }
    best = materialize(sum1, sum2);
    have = true;
  }
};

void enumerate_ssr(Search& s, int i, std::int64_t sum1, std::int64_t sum2,
                   int count1, int count2) {
  if (i == s.inst.size()) {
    if (count1 > 0 && count2 > 0) s.offer(sum1, sum2);
    return;
  }
  std::int64_t v = s.inst.value(i);
  s.assign[std::size_t(i)] = 0;
  enumerate_ssr(s, i + 1, sum1, sum2, count1, count2);
  s.assign[std::size_t(i)] = 1;
  enumerate_ssr(s, i + 1, sum1 + v, sum2, count1 + 1, count2);
  s.assign[std::size_t(i)] = 2;
  enumerate_ssr(s, i + 1, sum1, sum2 + v, count1, count2 + 1);
  s.assign[std::size_t(i)] = 0;
}

// As above, but index p is pinned to s1, nothing above p may join s1, and
// tail2 counts s2 members above p (at least one required).
void enumerate_semi(Search& s, int i, int p, std::int64_t sum1, std::int64_t sum2,
                    int count2, int tail2) {
  if (i == s.inst.size()) {
    if (count2 > 0 && tail2 > 0) s.offer(sum1, sum2);
    return;
  }
  std::int64_t v = s.inst.value(i);
  if (i == p) {
    s.assign[std::size_t(i)] = 1;
    enumerate_semi(s, i + 1, p, sum1 + v, sum2, count2, tail2);
    s.assign[std::size_t(i)] = 0;
    return;
  }
  s.assign[std::size_t(i)] = 0;
  enumerate_semi(s, i + 1, p, sum1, sum2, count2, tail2);
  if (i < p) {
    s.assign[std::size_t(i)] = 1;
    enumerate_semi(s, i + 1, p, sum1 + v, sum2, count2, tail2);
  }
  s.assign[std::size_t(i)] = 2;
  enumerate_semi(s, i + 1, p, sum1, sum2 + v, count2 + 1, tail2 + (i > p ? 1 : 0));
  s.assign[std::size_t(i)] = 0;
}

}  // namespace

SolutionPair brute_force_ssr(const Instance& inst) {
  check_oracle_size(inst);
  Search s(inst);
  enumerate_ssr(s, 0, 0, 0, 0, 0);
  return s.best;  // n >= 2 guarantees at least one feasible pair
}

SolutionPair brute_force_semi(const Instance& inst, int p) {
  check_oracle_size(inst);
  if (p < 0 || p > inst.size() - 2)
    throw std::invalid_argument("p out of range: " + std::to_string(p));
  Search s(inst);
  enumerate_semi(s, 0, p, 0, 0, 0, 0);
  return s.best;  // ({p}, {n-1}) is always feasible
}

}  // namespace ssr
