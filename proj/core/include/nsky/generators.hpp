#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nsky/geometry.hpp"

namespace nsky {

// n points whose coordinates are, per dimension, an independent random
// permutation of 0..n-1 (general position in every dimension). Meta records
// the seed and the brute-force skyline.
Instance gen_uniform(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

// An instance whose skyline has exactly k points: a staircase antichain of
// k maxima plus n-k points each strictly below a randomly chosen maximum,
// rank-flattened per dimension to integer coordinates in general position.
// Point roles are shuffled over ids. Validated against skyline_exact before
// returning. Throws when k is infeasible (k > 1 needs d >= 2).
Instance gen_fixed_skyline(std::uint32_t n, std::uint32_t d, std::uint32_t k,
                           std::uint64_t seed);

// Input to the null-vectors decision problem: k vectors over {0,2}^l with
// at most one nonzero entry each.
struct NullVectorsInput {
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::vector<std::int32_t> nonzero_pos;  // per vector: entry index, or -1 if all-zero

  // The ground-truth output: per vector the sum of its entries (0 or 2).
  std::vector<int> answer() const;
};

// k independent draws: all-zero with probability 1/2, otherwise a single 2
// at a uniformly random position.
NullVectorsInput gen_null_vectors(std::uint32_t k, std::uint32_t l, std::uint64_t seed);

// Block construction turning a null-vectors input into a skyline instance
// with n = (l+d-2)k/(d-2) points. Each block of d-2 vectors becomes l value
// rows (entry i of the column's independently permuted vector in column c)
// plus d-2 marker rows carrying a single 1; the two trailing dimensions are
// j and n-j so blocks never dominate one another. Meta stores the marker
// row of each vector, so the answer can be read off any skyline with no
// further queries. Requires d >= 3 and (d-2) | k.
Instance reduce_to_skyline(const NullVectorsInput& s, std::uint32_t d,
                           std::uint64_t seed);

// Step 2 of the reduction: w_i = 0 iff vector i's marker row is in the
// skyline, else 2. `sky` must be sorted ascending.
std::vector<int> decode_skyline_to_answer(std::span<const PointId> sky,
                                          const ReductionMeta& meta);

}  // namespace nsky
