#include "nsky/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsky/boosting.hpp"
#include "nsky/search.hpp"

namespace nsky {

bool dominates_noisy(PointId p, PointId q, NoisyOracle& oracle) {
  const std::uint32_t d = oracle.instance().dim();
  for (std::uint32_t i = 0; i < d; ++i) {
    const bool below = boost_prob([&] { return oracle.compare(p, q, i); },
                                  1.0 / (16.0 * d), 1.0 / 16.0);
    if (below) return false;
  }
  return true;
}

bool set_dominates(std::span<const PointId> s, PointId q, double delta1,
                   double delta2, NoisyOracle& oracle) {
  if (s.empty()) return false;
  const double per_member = delta1 / static_cast<double>(s.size());
  for (const PointId p : s) {
    if (boost_prob([&] { return dominates_noisy(p, q, oracle); }, per_member, delta2)) {
      return true;
    }
  }
  return false;
}

bool lex_noisy(PointId p, PointId q, NoisyOracle& oracle) {
  if (p == q) throw std::invalid_argument("lex_noisy requires distinct ids");
  const std::uint32_t d = oracle.instance().dim();
  for (std::uint32_t i = 0; i < d; ++i) {
    if (boost_prob([&] { return oracle.compare(q, p, i); },  // p_i > q_i
                   1.0 / (32.0 * d), 1.0 / 32.0)) {
      return true;
    }
    if (boost_prob([&] { return oracle.compare(p, q, i); },  // q_i > p_i
                   1.0 / (32.0 * d), 1.0 / 32.0)) {
      return false;
    }
  }
  return p > q;  // id tie-break keeps the order total
}

namespace {

// Largest counter wins; equal counters go to the lower point id.
std::size_t arg_top(const std::vector<std::int64_t>& c,
                    std::span<const PointId> s, std::size_t skip) {
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == skip) continue;
    if (best == SIZE_MAX || c[i] > c[best] || (c[i] == c[best] && s[i] < s[best])) {
      best = i;
    }
  }
  return best;
}

}  // namespace

PointId max_lex(PointId p, std::span<const PointId> s, double delta,
                NoisyOracle& oracle, MaxLexStats* stats) {
  if (s.empty()) throw std::invalid_argument("max_lex: empty set");
  if (std::find(s.begin(), s.end(), p) == s.end()) {
    throw std::invalid_argument("max_lex: p must be a member of s");
  }
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("max_lex: delta must lie in (0, 1/2)");
  }
  MaxLexStats local;
  MaxLexStats& st = stats ? *stats : local;
  st.iteration_cap = static_cast<std::uint64_t>(std::ceil(
      10.0 * (static_cast<double>(s.size()) + 3.0) * (std::log2(1.0 / delta) + 3.0)));
  if (s.size() == 1) return s[0];

  // Counters in half-units: steps are exactly +1/2 and -1. Each round takes
  // the two largest counters, sinks whichever of them fail the dominance
  // test, and lets the lex comparison order the two only when both pass, so
  // the target's counter climbs with probability >= 13/16 per round no
  // matter which rivals share the top. (Testing only the lex winner, as the
  // pseudocode reads, stalls whenever the target is lex-smaller than a
  // non-dominating rival: both counters then sink in lockstep and the
  // tournament clumps. The walk analysis needs the winner-by-dominance
  // rule; see the per-round error ledger in the analysis.)
  std::vector<std::int64_t> c(s.size(), 2 * ceil_log2_inv(delta));
  for (st.iterations = 0; st.iterations < st.iteration_cap;) {
    const std::size_t i1 = arg_top(c, s, SIZE_MAX);
    const std::size_t i2 = arg_top(c, s, i1);
    const bool dom1 = dominates_noisy(s[i1], p, oracle);
    const bool dom2 = dominates_noisy(s[i2], p, oracle);
    if (dom1 && dom2) {
      const bool first_wins = lex_noisy(s[i1], s[i2], oracle);
      c[first_wins ? i1 : i2] += 1;
      c[first_wins ? i2 : i1] -= 2;
    } else {
      c[i1] += dom1 ? 1 : -2;
      c[i2] += dom2 ? 1 : -2;
    }
    ++st.iterations;
    const std::size_t t1 = arg_top(c, s, SIZE_MAX);
    if (c[arg_top(c, s, t1)] <= -4) break;  // second-largest counter <= -2
  }
  st.cap_hit = st.iterations >= st.iteration_cap;
  return s[arg_top(c, s, SIZE_MAX)];
}

namespace {

// One run of the "p is outside this cell" test: each bounded endpoint is
// checked with a short margin walk and any confirmed violation means
// outside. Per-run error <= 17/81 < 1/3 at flip_prob = 1/3, as boost_prob
// requires, which a bare two-comparison AND test would not satisfy.
bool outside_cell_once(PointId p, const NoisyCell& cell, std::uint32_t dim,
                       NoisyOracle& oracle) {
  const auto bp = cell.breakpoints;
  const std::uint32_t last_leaf = static_cast<std::uint32_t>(2 * bp.size());
  const std::uint32_t t = cell.leaf;
  if (t > last_leaf) throw std::out_of_range("in_bucket: leaf index");
  if (bp.empty()) return false;  // whole line

  auto violated = [&](PointId a, PointId b, bool want_true) {
    return boost_with_margins(
               [&] { return oracle.compare(a, b, dim) != want_true; },
               kSearchCheckMargin, kSearchCheckMargin)
        .value;
  };

  if (t % 2 == 1) {  // singleton [b]: member iff !(p < b) and !(b < p)
    const PointId b = bp[(t - 1) / 2];
    if (violated(p, b, false)) return true;
    if (violated(b, p, false)) return true;
    return false;
  }
  if (t > 0) {  // bounded below by b_{t/2-1}, member needs b < p
    if (violated(bp[t / 2 - 1], p, true)) return true;
  }
  if (t < last_leaf) {  // bounded above by b_{t/2}, member needs p < b
    if (violated(p, bp[t / 2], true)) return true;
  }
  return false;
}

}  // namespace

bool in_bucket(PointId p, std::span<const NoisyCell> cells, NoisyOracle& oracle) {
  const std::uint32_t d = static_cast<std::uint32_t>(cells.size());
  if (d != oracle.instance().dim()) {
    throw std::invalid_argument("in_bucket: cell count must equal the dimension");
  }
  for (std::uint32_t i = 0; i < d; ++i) {
    const bool outside =
        boost_prob([&] { return outside_cell_once(p, cells[i], i, oracle); },
                   1.0 / (16.0 * d), 1.0 / 16.0);
    if (outside) return false;
  }
  return true;
}

bool is_empty(std::span<const NoisyCell> cells, std::span<const PointId> members,
              double delta1, double delta2, NoisyOracle& oracle) {
  if (members.empty()) return true;
  const double per_member = delta2 / static_cast<double>(members.size());
  for (const PointId p : members) {
    if (boost_prob([&] { return in_bucket(p, cells, oracle); }, per_member, delta1)) {
      return false;
    }
  }
  return true;
}

}  // namespace nsky
