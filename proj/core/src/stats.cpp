#include "nsky/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace nsky {

GamblerRuin gambler_ruin(double p, int s, int b) {
  if (!(p > 0.0 && p < 1.0) || p == 0.5) {
    throw std::invalid_argument("gambler_ruin: p must lie in (0,1) and differ from 1/2");
  }
  if (b < 1 || s < 0 || s > b) {
    throw std::invalid_argument("gambler_ruin: need 0 <= s <= b, b >= 1");
  }
  const double r = (1.0 - p) / p;
  const double rs = std::pow(r, s);
  const double rb = std::pow(r, b);
  GamblerRuin out;
  out.win = (rs - 1.0) / (rb - 1.0);
  out.ruin = (rb - rs) / (rb - 1.0);
  out.expected_steps =
      s / (1.0 - 2.0 * p) - (b / (1.0 - 2.0 * p)) * (1.0 - rs) / (1.0 - rb);
  return out;
}

namespace {

// P(X <= x) for X ~ Binomial(n, p), incremental term recurrence.
double binom_cdf(std::uint64_t x, std::uint64_t n, double p) {
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return x >= n ? 1.0 : 0.0;
  // log of the i=0 term, then term_{i+1} = term_i * (n-i)/(i+1) * p/(1-p)
  double log_term = static_cast<double>(n) * std::log1p(-p);
  double sum = 0.0;
  for (std::uint64_t i = 0;; ++i) {
    sum += std::exp(log_term);
    if (i >= x) break;
    log_term += std::log(static_cast<double>(n - i)) -
                std::log(static_cast<double>(i + 1)) + std::log(p) - std::log1p(-p);
  }
  return sum > 1.0 ? 1.0 : sum;
}

}  // namespace

BinomCI clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                        double confidence) {
  if (trials == 0 || successes > trials) {
    throw std::invalid_argument("clopper_pearson: bad counts");
  }
  const double alpha = 1.0 - confidence;
  BinomCI ci;
  if (successes == 0) {
    ci.lo = 0.0;
  } else {
    // largest p with P(X >= successes; p) <= alpha/2
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double tail = 1.0 - binom_cdf(successes - 1, trials, mid);
      (tail < alpha / 2.0 ? lo : hi) = mid;
    }
    ci.lo = lo;
  }
  if (successes == trials) {
    ci.hi = 1.0;
  } else {
    // smallest p with P(X <= successes; p) <= alpha/2
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double tail = binom_cdf(successes, trials, mid);
      (tail > alpha / 2.0 ? lo : hi) = mid;
    }
    ci.hi = hi;
  }
  return ci;
}

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("inverse_normal_cdf: p must lie in (0,1)");
  }
  // Acklam's approximation, |relative error| < 1.15e-9.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double chi_squared_critical(int df, double upper_tail_prob) {
  if (df < 1) throw std::invalid_argument("chi_squared_critical: df must be >= 1");
  const double z = inverse_normal_cdf(1.0 - upper_tail_prob);
  const double t = 2.0 / (9.0 * df);
  const double base = 1.0 - t + z * std::sqrt(t);
  return df * base * base * base;
}

}  // namespace nsky
