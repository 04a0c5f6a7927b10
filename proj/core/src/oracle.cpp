#include "nsky/oracle.hpp"

#include <stdexcept>

namespace nsky {

NoisyOracle::NoisyOracle(const Instance& instance, double flip_prob, std::uint64_t seed)
    : instance_(&instance), flip_prob_(flip_prob), seed_(seed), rng_(seed) {
  if (!(flip_prob >= 0.0 && flip_prob <= 1.0 / 3.0)) {
    throw std::invalid_argument("flip_prob must lie in [0, 1/3]");
  }
}

bool NoisyOracle::compare(PointId p, PointId q, std::uint32_t dim) {
  if (!instance_->has_point(p) || !instance_->has_point(q)) {
    throw std::out_of_range("oracle compare: unknown point id");
  }
  if (dim >= instance_->dim()) {
    throw std::out_of_range("oracle compare: dimension out of range");
  }
  ++queries_;
  const bool truth = instance_->coord(p, dim) < instance_->coord(q, dim);
  if (flip_prob_ == 0.0) return truth;
  return (rng_.next_unit() < flip_prob_) ? !truth : truth;
}

}  // namespace nsky
