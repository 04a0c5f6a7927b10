#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace nsky {

// ceil(log2(1/delta)) for delta in (0, 1/2).
inline int ceil_log2_inv(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("delta must lie in (0, 1/2)");
  }
  return static_cast<int>(std::ceil(std::log2(1.0 / delta) - 1e-9));
}

// Margins of the answer-count walk: stop at +up with "true", -down with "false".
struct BoostThresholds {
  int up = 1;
  int down = 1;

  static BoostThresholds from_deltas(double delta1, double delta2) {
    return {ceil_log2_inv(delta1), ceil_log2_inv(delta2)};
  }
};

struct BoostOutcome {
  bool value = false;
  std::uint64_t runs = 0;
};

// Repeat `test` and track (#true - #false); absorb at +up / -down.
// With per-run error p <= 1/3 this is a biased gambler's-ruin walk, so the
// error sides are at most 2^-up (false positive) and 2^-down (false negative)
// and the expected number of runs is O(min side) + O(1).
template <typename Test>
BoostOutcome boost_with_margins(Test&& test, int up, int down) {
  if (up < 1 || down < 1) throw std::invalid_argument("boost margins must be >= 1");
  BoostOutcome out;
  int margin = 0;
  for (;;) {
    ++out.runs;
    margin += test() ? 1 : -1;
    if (margin >= up) { out.value = true; return out; }
    if (margin <= -down) { out.value = false; return out; }
  }
}

// Two-sided amplification of a constant-error test: false positive w.p. at
// most delta1, false negative w.p. at most delta2. Requires the per-run
// error of `test` to be at most 1/3 and runs to be independent.
template <typename Test>
bool boost_prob(Test&& test, double delta1, double delta2) {
  const auto th = BoostThresholds::from_deltas(delta1, delta2);
  return boost_with_margins(std::forward<Test>(test), th.up, th.down).value;
}

template <typename Test>
BoostOutcome boost_prob_counted(Test&& test, double delta1, double delta2) {
  const auto th = BoostThresholds::from_deltas(delta1, delta2);
  return boost_with_margins(std::forward<Test>(test), th.up, th.down);
}

}  // namespace nsky
