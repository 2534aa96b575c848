#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "exitlab/common.hpp"

namespace exitlab::stats {

inline constexpr double kZ95 = 1.959963984540054;

// Wilson 95% interval half-width for a binomial proportion.
inline double wilson_halfwidth(double phat, long n, double z = kZ95) {
  if (n <= 0) throw EmptySample("wilson_halfwidth: n <= 0");
  const double z2 = z * z;
  return z / (1.0 + z2 / n) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
}

// Plain binomial standard error with an exact-zero guard: at counts 0 or n
// the plug-in estimate degenerates, so fall back to the (s+1)/(n+2) rate.
inline double binomial_se(long count, long n) {
  if (n <= 0) throw EmptySample("binomial_se: n <= 0");
  double p = double(count) / double(n);
  if (count == 0 || count == n) p = double(count + 1) / double(n + 2);
  return std::sqrt(p * (1.0 - p) / double(n));
}

inline double joint_se(double a, double b) { return std::sqrt(a * a + b * b); }

// One-sample Kolmogorov-Smirnov statistic against a CDF evaluated per sample.
// `samples` need not be sorted.
template <class Cdf>
double ks_statistic(std::span<const double> samples, Cdf&& cdf) {
  if (samples.empty()) throw EmptySample("ks_statistic: empty sample");
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const double n = double(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max(d, std::abs(f - double(i) / n));
    d = std::max(d, std::abs(double(i + 1) / n - f));
  }
  return d;
}

// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw EmptySample("ks_two_sample: empty sample");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] <= y[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(double(i) / x.size() - double(j) / y.size()));
  }
  return d;
}

// Asymptotic KS critical value at significance level 1%.
inline double ks_critical_1pct(long n) { return 1.62762 / std::sqrt(double(n)); }

inline double ks_critical_1pct_two_sample(long n, long m) {
  return 1.62762 * std::sqrt(double(n + m) / (double(n) * double(m)));
}

}  // namespace exitlab::stats
