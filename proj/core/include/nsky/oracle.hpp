#pragma once

#include <cstdint>

#include "nsky/geometry.hpp"
#include "nsky/rng.hpp"

namespace nsky {

// The noisy comparison primitive. Every call answers "is the i-th coordinate
// of p strictly smaller than that of q?", lying independently with
// probability exactly flip_prob, and bumps the query counter by one.
//
// Single-owner: the counter and the random stream are shared mutable state,
// so parallel trials must each build their own oracle from a derived seed.
class NoisyOracle {
 public:
  // flip_prob must lie in [0, 1/3].
  NoisyOracle(const Instance& instance, double flip_prob, std::uint64_t seed);

  bool compare(PointId p, PointId q, std::uint32_t dim);

  std::uint64_t snapshot_queries() const { return queries_; }
  double flip_prob() const { return flip_prob_; }
  std::uint64_t seed() const { return seed_; }
  const Instance& instance() const { return *instance_; }

 private:
  const Instance* instance_;
  double flip_prob_;
  std::uint64_t seed_;
  Rng rng_;
  std::uint64_t queries_ = 0;
};

}  // namespace nsky
