#include "skembed/stats.hpp"

#include <algorithm>
#include <cmath>

#include "skembed/errors.hpp"
#include "skembed/rng.hpp"

namespace skembed {

MeanStderr mean_stderr(const std::vector<double>& xs) {
  MeanStderr out;
  out.n = xs.size();
  if (xs.empty()) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  if (xs.size() > 1) {
    const double var = ss / static_cast<double>(xs.size() - 1);
    out.stderr_ = std::sqrt(var / static_cast<double>(xs.size()));
  }
  return out;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) fail(ErrorCode::InvalidArgument, "ks: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = cdf(samples[i]);
    const double lo = static_cast<double>(i) / n;      // F_n just below x_i
    const double hi = static_cast<double>(i + 1) / n;  // F_n at x_i
    d = std::max(d, std::max(std::abs(F - lo), std::abs(F - hi)));
  }
  return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    fail(ErrorCode::InvalidArgument, "ks: empty sample");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] <= x) ++ia;
    while (ib < b.size() && b[ib] <= x) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na -
                             static_cast<double>(ib) / nb));
  }
  return d;
}

double kolmogorov_cdf(double x) {
  if (x <= 0.0) return 0.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::max(0.0, 1.0 - 2.0 * sum);
}

double ks_critical_value(double alpha, std::size_t n) {
  if (n == 0 || alpha <= 0.0 || alpha >= 1.0) {
    fail(ErrorCode::InvalidArgument, "ks_critical_value: bad arguments");
  }
  double lo = 0.0, hi = 4.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_cdf(mid) < 1.0 - alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi) / std::sqrt(static_cast<double>(n));
}

double hill_tail_index(std::vector<double> samples, std::size_t k) {
  const std::size_t n = samples.size();
  if (k < 50 || k > n / 10) {
    fail(ErrorCode::InsufficientTail,
         "hill estimator requires 50 <= k <= n/10");
  }
  std::sort(samples.begin(), samples.end(), std::greater<double>());
  const double pivot = samples[k];  // (k+1)-th largest
  if (pivot <= 0.0) {
    fail(ErrorCode::InsufficientTail, "hill estimator needs positive tail");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += std::log(samples[i] / pivot);
  if (s <= 0.0) {
    fail(ErrorCode::InsufficientTail, "degenerate upper order statistics");
  }
  return static_cast<double>(k) / s;
}

BootstrapCI bootstrap_mean_ci(const std::vector<double>& xs,
                              const std::function<double(double)>& f,
                              int resamples, std::uint64_t seed) {
  if (xs.empty()) fail(ErrorCode::InvalidArgument, "bootstrap: empty sample");
  const std::size_t n = xs.size();
  std::vector<double> fx(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    fx[i] = f(xs[i]);
    sum += fx[i];
  }
  BootstrapCI out;
  out.estimate = sum / static_cast<double>(n);
  out.resamples = resamples;
  std::vector<double> means(static_cast<std::size_t>(resamples));
  std::mt19937_64 eng(splitmix64(seed));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int r = 0; r < resamples; ++r) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += fx[pick(eng)];
    means[static_cast<std::size_t>(r)] = s / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  const auto at = [&](double q) {
    const double pos = q * static_cast<double>(means.size() - 1);
    const std::size_t i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    if (i + 1 >= means.size()) return means.back();
    return means[i] * (1.0 - frac) + means[i + 1] * frac;
  };
  out.lo = at(0.025);
  out.hi = at(0.975);
  return out;
}

}  // namespace skembed
