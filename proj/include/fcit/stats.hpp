#ifndef FCIT_STATS_HPP
#define FCIT_STATS_HPP

#include <span>
#include <utility>

namespace fcit {

/// Regularized incomplete beta function I_x(a, b) via the standard continued
/// fraction; exposed for the statistics tests.
double regularized_incomplete_beta(double a, double b, double x);

/// Exact (Clopper-Pearson) two-sided confidence interval for a binomial
/// proportion with k successes in n trials at level 1 - alpha. Uses the
/// Beta-quantile characterization, inverted by bisection to 1e-10; the k = 0
/// and k = n ends use their closed forms, so lo == 0 when k == 0 and
/// hi == 1 when k == n exactly.
std::pair<double, double> clopper_pearson(long long k, long long n, double alpha);

struct MedianCi {
  double median;
  double lo;
  double hi;
  /// False when n is too small for any order-statistic pair to reach the
  /// requested coverage; lo/hi then span the whole sample.
  bool coverage_met;
  /// 1-based order-statistic ranks of lo and hi.
  int lo_rank;
  int hi_rank;
};

/// Distribution-free confidence interval for the median from order
/// statistics: the narrowest rank pair (l, u) whose binomial(n, 1/2)
/// coverage reaches 1 - alpha, preferring the most tail-symmetric pair on
/// ties. Bounds are always actual sample values, never interpolated.
/// Infinite entries are permitted and must sort last.
MedianCi median_ci(std::span<const double> sorted_values, double alpha);

}  // namespace fcit

#endif  // FCIT_STATS_HPP
