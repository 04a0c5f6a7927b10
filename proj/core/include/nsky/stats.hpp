#pragma once

#include <cstdint>

namespace nsky {

struct GamblerRuin {
  double ruin = 0.0;            // absorbed at 0
  double win = 0.0;             // absorbed at b
  double expected_steps = 0.0;  // mean absorption time
};

// Closed forms for the biased walk on [0, b] starting at s with up-step
// probability p (p != 1/2): with r = (1-p)/p,
//   win  = (r^s - 1) / (r^b - 1)
//   ruin = (r^b - r^s) / (r^b - 1)
//   E[T] = s/(1-2p) - b/(1-2p) * (1 - r^s) / (1 - r^b)
// The analytic oracle behind every boosting acceptance test.
// Pre: p in (0,1) \ {1/2}, 0 <= s <= b, b >= 1.
GamblerRuin gambler_ruin(double p, int s, int b);

struct BinomCI {
  double lo = 0.0;
  double hi = 1.0;
};

// Exact (Clopper-Pearson) two-sided binomial confidence interval.
BinomCI clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                        double confidence = 0.95);

// Upper quantile of the chi-squared distribution with df degrees of freedom
// (Wilson-Hilferty approximation; ample for the goodness-of-fit checks here).
double chi_squared_critical(int df, double upper_tail_prob);

// Standard normal quantile (Acklam's rational approximation).
double inverse_normal_cdf(double p);

}  // namespace nsky
