#include "nsky/search.hpp"

#include <cmath>
#include <stdexcept>

#include "nsky/boosting.hpp"

namespace nsky {

namespace {

// One endpoint constraint: satisfied iff compare(a, b, dim) answers `want`.
struct Side {
  PointId a = 0;
  PointId b = 0;
  bool want = true;
};

// Leaf numbering over breakpoints b_0 < ... < b_{m-1}:
// leaf 0 = (-inf, b_0), leaf 2i+1 = [b_i], leaf 2i+2 = (b_i, b_{i+1}),
// leaf 2m = (b_{m-1}, +inf).

// Lower boundary of a node whose leftmost leaf is `lo` (lo > 0).
Side lower_side(PointId target, std::span<const PointId> bp, std::uint32_t lo) {
  if (lo % 2 == 1) return {target, bp[(lo - 1) / 2], false};  // y >= b
  return {bp[lo / 2 - 1], target, true};                      // y > b
}

// Upper boundary of a node whose rightmost leaf is `hi` (hi < 2m). The same
// constraint routes the walk left at an internal split after leaf `hi`.
Side upper_side(PointId target, std::span<const PointId> bp, std::uint32_t hi) {
  if (hi % 2 == 1) return {bp[(hi - 1) / 2], target, false};  // y <= b
  return {target, bp[hi / 2], true};                          // y < b
}

bool confirm(const Side& s, std::uint32_t dim, NoisyOracle& oracle) {
  return boost_with_margins(
             [&] { return oracle.compare(s.a, s.b, dim) == s.want; },
             kSearchCheckMargin, kSearchCheckMargin)
      .value;
}

struct Node {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

}  // namespace

NoisySearchResult noisy_search(PointId target, std::uint32_t dim,
                               std::span<const PointId> breakpoints,
                               double delta, NoisyOracle& oracle) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("noisy_search: delta must lie in (0, 1)");
  }
  const std::size_t m = breakpoints.size();
  const Instance& x = oracle.instance();
  std::vector<double> values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = x.coord(breakpoints[i], dim);
  if (m == 0) return {0, Interval::whole_line()};

  const std::uint32_t last_leaf = static_cast<std::uint32_t>(2 * m);
  const auto steps = static_cast<std::uint64_t>(
      std::ceil(kSearchStepScale * std::log2((static_cast<double>(m) + 2.0) / delta)));

  std::vector<Node> path{{0, last_leaf}};
  std::uint64_t chain_depth = 0;

  auto member = [&](const Node& v) {
    if (v.lo > 0 && !confirm(lower_side(target, breakpoints, v.lo), dim, oracle)) {
      return false;
    }
    if (v.hi < last_leaf && !confirm(upper_side(target, breakpoints, v.hi), dim, oracle)) {
      return false;
    }
    return true;
  };

  for (std::uint64_t step = 0; step < steps; ++step) {
    const Node v = path.back();
    if (chain_depth > 0) {
      // Inside the leaf chain; every chain node repeats the leaf's check.
      chain_depth += member(v) ? 1 : -1;
      continue;
    }
    if (!member(v)) {
      if (path.size() > 1) path.pop_back();  // clamp at the root
      continue;
    }
    if (v.lo == v.hi) {
      chain_depth = 1;
      continue;
    }
    const std::uint32_t mid = (v.lo + v.hi) / 2;
    const bool go_left = confirm(upper_side(target, breakpoints, mid), dim, oracle);
    path.push_back(go_left ? Node{v.lo, mid} : Node{mid + 1, v.hi});
  }

  // A walk that ends on an internal node has already failed; picking the
  // middle leaf keeps the output well-typed and deterministic.
  const Node end = path.back();
  const std::uint32_t leaf = (end.lo == end.hi) ? end.lo : (end.lo + end.hi) / 2;
  return {leaf, partition_cell(values, leaf)};
}

std::vector<PointId> noisy_sort(std::span<const PointId> items, std::uint32_t dim,
                                double delta, NoisyOracle& oracle) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("noisy_sort: delta must lie in (0, 1)");
  }
  const std::size_t m = items.size();
  std::vector<PointId> z;
  z.reserve(m);
  for (const PointId item : items) {
    const auto res = noisy_search(item, dim, z, delta / static_cast<double>(m), oracle);
    // leaf 2i -> slot i; singleton leaf 2i+1 -> right after element i.
    const std::size_t pos = (res.leaf % 2 == 0) ? res.leaf / 2 : (res.leaf - 1) / 2 + 1;
    z.insert(z.begin() + static_cast<std::ptrdiff_t>(pos), item);
  }
  return z;
}

std::vector<PointId> dedupe_sorted(std::span<const PointId> sorted_ids,
                                   std::uint32_t dim, double delta,
                                   NoisyOracle& oracle) {
  std::vector<PointId> kept(sorted_ids.begin(), sorted_ids.end());
  if (kept.size() <= 1) return kept;
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("dedupe_sorted: delta must lie in (0, 1)");
  }
  const double per_side = delta / (2.0 * static_cast<double>(sorted_ids.size()));
  std::vector<PointId> out;
  out.reserve(kept.size());
  out.push_back(kept.front());
  for (std::size_t i = 1; i < kept.size(); ++i) {
    const PointId a = out.back();
    const PointId b = kept[i];
    const bool a_below =
        boost_prob([&] { return oracle.compare(a, b, dim); }, per_side, per_side);
    const bool b_below =
        !a_below &&
        boost_prob([&] { return oracle.compare(b, a, dim); }, per_side, per_side);
    if (a_below || b_below) out.push_back(b);  // distinct values: keep
  }
  return out;
}

}  // namespace nsky
