#include <doctest.h>

#include <cmath>
#include <random>

#include "skembed/rng.hpp"
#include "skembed/stats.hpp"

using namespace skembed;

TEST_CASE("ks statistic against the exact uniform cdf") {
  // Deterministic pseudo-uniform sample.
  std::mt19937_64 eng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(20000);
  for (double& x : xs) x = u(eng);
  const double d = ks_statistic(xs, [](double x) {
    return std::clamp(x, 0.0, 1.0);
  });
  CHECK(d < ks_critical_value(0.01, xs.size()));
  // A shifted sample must fail decisively.
  for (double& x : xs) x = 0.5 * x;
  const double d2 = ks_statistic(xs, [](double x) {
    return std::clamp(x, 0.0, 1.0);
  });
  CHECK(d2 > 0.4);
}

TEST_CASE("ks handles step cdfs through one-sided limits") {
  // All mass at 0 vs. the CDF of a fair coin on {-1, +1}: D = 1/2.
  std::vector<double> xs(100, 0.0);
  const double d = ks_statistic(xs, [](double x) {
    if (x < -1.0) return 0.0;
    if (x < 1.0) return 0.5;
    return 1.0;
  });
  CHECK(d == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("kolmogorov critical value matches the classical constant") {
  // K^{-1}(0.99) = 1.6276 (four decimals).
  const double k99 = ks_critical_value(0.01, 1) * 1.0;
  CHECK(k99 == doctest::Approx(1.6276).epsilon(2e-4));
  CHECK(kolmogorov_cdf(k99) == doctest::Approx(0.99).epsilon(1e-6));
}

TEST_CASE("two-sample ks") {
  std::mt19937_64 eng(7);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> a(5000), b(5000);
  for (double& x : a) x = g(eng);
  for (double& x : b) x = g(eng);
  CHECK(ks_statistic_two_sample(a, b) < 1.63 * std::sqrt(2.0 / 5000.0));
  for (double& x : b) x += 1.0;
  CHECK(ks_statistic_two_sample(a, b) > 0.3);
}

TEST_CASE("hill estimator recovers a pareto exponent") {
  // X = U^{-1/alpha} is Pareto(alpha); tail index alpha.
  for (double alpha : {1.0, 2.0}) {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> xs(100000);
    for (double& x : xs) x = std::pow(u(eng), -1.0 / alpha);
    const double est = hill_tail_index(xs, 1000);
    CHECK(est == doctest::Approx(alpha).epsilon(0.12));
  }
}

TEST_CASE("hill estimator preconditions") {
  std::vector<double> xs(400, 1.0);
  CHECK_THROWS(hill_tail_index(xs, 10));   // k < 50
  CHECK_THROWS(hill_tail_index(xs, 200));  // k > n/10
}

TEST_CASE("bootstrap mean ci brackets the mean") {
  std::mt19937_64 eng(3);
  std::normal_distribution<double> g(5.0, 2.0);
  std::vector<double> xs(5000);
  for (double& x : xs) x = g(eng);
  const auto ci = bootstrap_mean_ci(xs, [](double x) { return x; }, 500, 9);
  CHECK(ci.lo < 5.0);
  CHECK(ci.hi > 5.0);
  CHECK(ci.hi - ci.lo < 0.5);
}

TEST_CASE("path engines are schedule independent") {
  auto a = path_engine(123, 5);
  auto b = path_engine(123, 5);
  CHECK(a() == b());
  auto c = path_engine(123, 6);
  CHECK(a() != c());
}
