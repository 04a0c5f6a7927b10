#pragma once

#include <span>
#include <vector>

#include "nsky/geometry.hpp"
#include "nsky/oracle.hpp"

namespace nsky {

// Does p weakly dominate q (q_i <= p_i in every dimension)? Error <= 1/16.
// Per dimension a boosted test of p_i < q_i with budgets (1/(16d), 1/16);
// the first confirmed violation settles it. Expected queries O(d).
bool dominates_noisy(PointId p, PointId q, NoisyOracle& oracle);

// Does some member of s weakly dominate q? False positive <= delta1,
// false negative <= delta2. Scans s, boosting dominates_noisy with budgets
// (delta1/|s|, delta2), returning true on the first confirmed dominator.
// Expected queries O(|s| d log(1/delta2) + d log(|s|/delta1)).
bool set_dominates(std::span<const PointId> s, PointId q, double delta1,
                   double delta2, NoisyOracle& oracle);

// Is p lexicographically greater than q? Error <= 1/16. Per dimension,
// boosted tests of p_i > q_i then q_i > p_i with budgets (1/(32d), 1/32);
// all-equal coordinates fall through to the noise-free id tie-break.
bool lex_noisy(PointId p, PointId q, NoisyOracle& oracle);

struct MaxLexStats {
  std::uint64_t iterations = 0;
  std::uint64_t iteration_cap = 0;
  bool cap_hit = false;
};

// The lexicographic maximum among members of s that weakly dominate p
// (nonempty: p dominates itself), w.p. >= 1 - delta. Counter dynamics over
// s: all counters start at log2(1/delta); each round orders the two largest
// by lex_noisy, decrements the loser by 1, then tests the winner against p
// (+1/2 on dominance, -1 otherwise), until the second-largest counter
// drops to -2. Counters are kept in half-units. Expected queries
// O(|s| d log(1/delta)); a hard cap of 10(|s|+3)(log2(1/delta)+3) rounds
// is enforced and never reached on noiseless runs.
// Pre: p is a member of s, |s| >= 1, delta in (0, 1/2).
PointId max_lex(PointId p, std::span<const PointId> s, double delta,
                NoisyOracle& oracle, MaxLexStats* stats = nullptr);

// Oracle-facing view of one bucket cell: a leaf of the 2m+1 partition over
// breakpoints whose dim-coordinates are strictly increasing. Endpoint
// comparisons against those breakpoint points are the only queries issued.
struct NoisyCell {
  std::span<const PointId> breakpoints;
  std::uint32_t leaf = 0;
};

// Is p inside the bucket spanned by cells[0..d-1] (cell i constrains
// dimension i)? Error <= 1/16. Per dimension a boosted non-membership test
// with budgets (1/(16d), 1/16); each run of that test confirms endpoint
// violations with short margin walks so its one-run error stays <= 1/3.
bool in_bucket(PointId p, std::span<const NoisyCell> cells, NoisyOracle& oracle);

// Is the bucket free of all of `members`? Incorrectly true w.p. <= delta1,
// incorrectly false w.p. <= delta2. Boosts in_bucket per member with
// budgets (delta2/|members|, delta1). Expected queries
// O(d |members| log(1/delta1)) + O(d log(d |members| / delta2)).
bool is_empty(std::span<const NoisyCell> cells, std::span<const PointId> members,
              double delta1, double delta2, NoisyOracle& oracle);

}  // namespace nsky
