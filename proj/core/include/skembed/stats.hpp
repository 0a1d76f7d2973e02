#ifndef SKEMBED_STATS_HPP
#define SKEMBED_STATS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace skembed {

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;
};

MeanStderr mean_stderr(const std::vector<double>& xs);

// sup_x |F_n(x) - F(x)| for a continuous (or mixed) reference CDF. Both
// one-sided limits are checked at every sample point, so step CDFs are
// handled correctly.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// Two-sample sup-distance between empirical CDFs.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// P(K <= x) for the asymptotic Kolmogorov distribution.
double kolmogorov_cdf(double x);

// Critical sup-distance for a one-sample test of size n at level alpha,
// i.e. K^{-1}(1 - alpha) / sqrt(n).
double ks_critical_value(double alpha, std::size_t n);

// Hill estimator of the power-law tail index from the k upper order
// statistics. Requires 50 <= k and k <= n/10; throws InsufficientTail
// otherwise.
double hill_tail_index(std::vector<double> samples, std::size_t k);

struct BootstrapCI {
  double estimate = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int resamples = 0;
};

// Percentile bootstrap confidence interval (95%) for the mean of
// f(x) over the sample.
BootstrapCI bootstrap_mean_ci(const std::vector<double>& xs,
                              const std::function<double(double)>& f,
                              int resamples, std::uint64_t seed);

}  // namespace skembed

#endif  // SKEMBED_STATS_HPP
