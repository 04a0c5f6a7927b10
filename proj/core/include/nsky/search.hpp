#pragma once

#include <span>
#include <vector>

#include "nsky/geometry.hpp"
#include "nsky/oracle.hpp"

namespace nsky {

// Walk length: steps = ceil(kSearchStepScale * log2((m+2)/delta)).
// Calibrated so the empirical failure rate stays below delta at
// flip_prob = 1/3 across the acceptance grid; recorded as a tunable.
inline constexpr int kSearchStepScale = 32;

// Margin of the per-endpoint (and routing) confirmation walks inside one
// search step. 3 makes each endpoint/routing decision err with probability
// 1/9 at flip_prob = 1/3, which keeps every walk drift strictly above 1/2.
inline constexpr int kSearchCheckMargin = 3;

struct NoisySearchResult {
  std::uint32_t leaf = 0;  // index into the 2m+1 cell partition
  Interval interval;       // the same cell with coordinate values filled in
};

// Noisy binary search: find the cell of the 2m+1 partition induced by
// `breakpoints` (point ids with strictly increasing dim-coordinates) that
// holds the dim-coordinate of `target`. A biased random walk on the search
// tree extended with per-leaf infinite chains: at each node the bounding
// endpoints are re-checked and the walk retreats to the parent on a
// confirmed violation, otherwise descends by one routing comparison.
// Error probability <= delta; expected queries O(log(m/delta)).
// An empty breakpoint list returns the whole line without querying.
NoisySearchResult noisy_search(PointId target, std::uint32_t dim,
                               std::span<const PointId> breakpoints,
                               double delta, NoisyOracle& oracle);

// Noisy insertion sort: repeated noisy_search of each item into the list
// built so far, per-insertion budget delta/m. Non-decreasing dim-coordinate
// order w.p. >= 1 - delta; expected queries O(m log(m/delta)).
std::vector<PointId> noisy_sort(std::span<const PointId> items, std::uint32_t dim,
                                double delta, NoisyOracle& oracle);

// Keep the first element of each run of equal dim-values, w.p. >= 1 - delta.
// Equality of an adjacent pair is decided by two independently boosted
// strict comparisons (the model has no equality query), each with budget
// delta/(2m) per error side.
std::vector<PointId> dedupe_sorted(std::span<const PointId> sorted_ids,
                                   std::uint32_t dim, double delta,
                                   NoisyOracle& oracle);

}  // namespace nsky
