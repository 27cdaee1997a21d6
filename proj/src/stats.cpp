#include "fcit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fcit/errors.hpp"

namespace fcit {

namespace {

// Continued fraction for the incomplete beta (Lentz's method).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw ContractViolation("incomplete beta: a, b must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw ContractViolation("incomplete beta: x outside [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(b) - std::lgamma(a) +
                        b * std::log1p(-x) + a * std::log(x)) *
                   beta_cf(b, a, 1.0 - x) / b;
}

namespace {

// Smallest x in [0,1] with I_x(a,b) >= p, to 1e-10.
double beta_quantile(double p, double a, double b) {
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (regularized_incomplete_beta(a, b, mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::pair<double, double> clopper_pearson(long long k, long long n, double alpha) {
  if (n < 1 || k < 0 || k > n) throw ContractViolation("clopper_pearson: need 0 <= k <= n, n >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ContractViolation("clopper_pearson: alpha outside (0,1)");
  const double half = alpha / 2.0;
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);

  double lo, hi;
  if (k == 0) {
    lo = 0.0;
  } else if (k == n) {
    lo = std::pow(half, 1.0 / nd);
  } else {
    lo = beta_quantile(half, kd, nd - kd + 1.0);
  }
  if (k == n) {
    hi = 1.0;
  } else if (k == 0) {
    hi = 1.0 - std::pow(half, 1.0 / nd);
  } else {
    hi = beta_quantile(1.0 - half, kd + 1.0, nd - kd);
  }
  return {lo, hi};
}

MedianCi median_ci(std::span<const double> sorted_values, double alpha) {
  const int n = static_cast<int>(sorted_values.size());
  if (n == 0) throw ContractViolation("median_ci: empty input");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ContractViolation("median_ci: alpha outside (0,1)");
  if (!std::is_sorted(sorted_values.begin(), sorted_values.end())) {
    throw ContractViolation("median_ci: values must be sorted ascending");
  }

  double median;
  if (n % 2 == 1) {
    median = sorted_values[static_cast<std::size_t>(n / 2)];
  } else {
    const double a = sorted_values[static_cast<std::size_t>(n / 2 - 1)];
    const double b = sorted_values[static_cast<std::size_t>(n / 2)];
    median = std::isinf(a) && std::isinf(b) ? a : 0.5 * (a + b);
  }

  // Binomial(n, 1/2) CDF table; cdf[i] = P(B <= i), cdf[-1] treated as 0.
  std::vector<double> cdf(static_cast<std::size_t>(n) + 1);
  {
    // pmf via running ratio to avoid overflow for large n.
    std::vector<double> log_pmf(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      log_pmf[static_cast<std::size_t>(i)] = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                                             std::lgamma(n - i + 1.0) -
                                             n * std::log(2.0);
    }
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      acc += std::exp(log_pmf[static_cast<std::size_t>(i)]);
      cdf[static_cast<std::size_t>(i)] = std::min(acc, 1.0);
    }
  }
  auto cdf_at = [&](int i) { return i < 0 ? 0.0 : cdf[static_cast<std::size_t>(std::min(i, n))]; };
  // Coverage of the order-statistic pair (l, u), 1-based ranks.
  auto coverage = [&](int l, int u) { return cdf_at(u - 1) - cdf_at(l - 1); };

  const double needed = 1.0 - alpha;
  int best_l = -1, best_u = -1;
  double best_imbalance = 0.0;
  for (int width = 1; width <= n - 1 && best_l < 0; ++width) {
    for (int l = 1; l + width <= n; ++l) {
      const int u = l + width;
      if (coverage(l, u) >= needed) {
        const double imbalance = std::abs(cdf_at(l - 1) - (1.0 - cdf_at(u - 1)));
        if (best_l < 0 || imbalance < best_imbalance) {
          best_l = l;
          best_u = u;
          best_imbalance = imbalance;
        }
      }
    }
  }

  MedianCi out{};
  out.median = median;
  if (best_l < 0) {
    out.coverage_met = false;
    out.lo_rank = 1;
    out.hi_rank = n;
  } else {
    out.coverage_met = true;
    out.lo_rank = best_l;
    out.hi_rank = best_u;
  }
  out.lo = sorted_values[static_cast<std::size_t>(out.lo_rank - 1)];
  out.hi = sorted_values[static_cast<std::size_t>(out.hi_rank - 1)];
  return out;
}

}  // namespace fcit
