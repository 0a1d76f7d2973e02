#include <doctest.h>

#include <cmath>
#include <numbers>

#include "skembed/construction.hpp"
#include "skembed/errors.hpp"
#include "skembed/measure.hpp"
#include "skembed/simulate.hpp"
#include "skembed/stats.hpp"
#include "support/fixtures.hpp"

using namespace skembed;

namespace {

constexpr double kPi = std::numbers::pi;

double uniform_cdf_0_1(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

TEST_CASE("euler on the disk: mean exit time and uniform exit angle") {
  const auto disk = fixtures::circle(1.0, 4096);
  EulerOptions opts;
  opts.dt = 1e-3;
  opts.n_paths = 30000;
  opts.seed = 2024;
  opts.bridge_correction = true;
  const ExitSampleSet s = euler_exit(disk, {0.0, 0.0}, opts);
  REQUIRE(s.records.size() == opts.n_paths);

  const MeanStderr ms = mean_stderr(s.exit_times());
  CHECK(std::abs(ms.mean - 0.5) <= 3.0 * ms.stderr_);

  // Exit angles uniform on (-pi, pi].
  std::vector<double> angles;
  for (const auto& r : s.records) {
    angles.push_back(std::atan2(r.exit_y, r.exit_x));
  }
  const double d = ks_statistic(angles, [](double a) {
    return std::clamp((a + kPi) / (2.0 * kPi), 0.0, 1.0);
  });
  CHECK(d < 1.63 / std::sqrt(static_cast<double>(angles.size())));
  CHECK(s.delta_report < 1e-6);
}

TEST_CASE("euler on the strip: mean exit time is the second moment") {
  const auto strip = fixtures::vertical_strip(1.0, 8.0);
  EulerOptions opts;
  opts.dt = 1e-3;
  opts.n_paths = 20000;
  opts.seed = 7;
  opts.bridge_correction = true;
  const ExitSampleSet s = euler_exit(strip, {0.0, 0.0}, opts);
  const MeanStderr ms = mean_stderr(s.exit_times());
  CHECK(std::abs(ms.mean - 1.0) <= 3.0 * ms.stderr_);
}

TEST_CASE("dt refinement: estimates move toward the disk value") {
  const auto disk = fixtures::circle(1.0, 4096);
  const auto run = [&](double dt, std::size_t n, bool bridge) {
    EulerOptions opts;
    opts.dt = dt;
    opts.n_paths = n;
    opts.seed = 99;
    opts.bridge_correction = bridge;
    return mean_stderr(euler_exit(disk, {0.0, 0.0}, opts).exit_times()).mean;
  };
  // Raw crossing detection is late by O(sqrt(dt)); halving dt must shrink it.
  const double m8 = run(8e-3, 30000, false);
  const double m2 = run(2e-3, 30000, false);
  CHECK(m8 > m2);
  CHECK(m2 > 0.5);
  // With the bridge test the dt = 1e-3 bias sits below 1%.
  const double m1 = run(1e-3, 100000, true);
  CHECK(std::abs(m1 - 0.5) < 0.005);
}

TEST_CASE("path budget is reported, not dropped") {
  const auto disk = fixtures::circle(1.0, 512);
  EulerOptions opts;
  opts.dt = 1e-3;
  opts.n_paths = 200;
  opts.seed = 3;
  opts.max_steps = 10;  // absurdly small: most paths get censored
  const ExitSampleSet s = euler_exit(disk, {0.0, 0.0}, opts);
  CHECK(s.budget_exceeded > 0);
  CHECK(s.records.size() + s.budget_exceeded == opts.n_paths);
  CHECK(s.censored_times.size() == s.budget_exceeded);
}

TEST_CASE("euler determinism: identical config, identical samples") {
  const auto disk = fixtures::circle(1.0, 1024);
  EulerOptions opts;
  opts.dt = 2e-3;
  opts.n_paths = 500;
  opts.seed = 11;
  const ExitSampleSet a = euler_exit(disk, {0.2, 0.1}, opts);
  const ExitSampleSet b = euler_exit(disk, {0.2, 0.1}, opts);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].exit_x == b.records[i].exit_x);
    CHECK(a.records[i].exit_y == b.records[i].exit_y);
    CHECK(a.records[i].exit_time == b.records[i].exit_time);
    CHECK(a.records[i].n_steps == b.records[i].n_steps);
  }
}

TEST_CASE("wos on the disk: uniform positions, mean time 1/2") {
  const auto disk = fixtures::circle(1.0, 4096);
  WosOptions opts;
  opts.eps = 1e-6;
  opts.n_paths = 30000;
  opts.seed = 41;
  const ExitSampleSet s = wos_exit(disk, {0.0, 0.0}, opts);
  CHECK(s.mean_time_only);
  const MeanStderr ms = mean_stderr(s.exit_times());
  CHECK(std::abs(ms.mean - 0.5) <= std::max(3.0 * ms.stderr_, 1e-3));
  std::vector<double> angles;
  for (const auto& r : s.records) {
    angles.push_back(std::atan2(r.exit_y, r.exit_x));
  }
  const double d = ks_statistic(angles, [](double a) {
    return std::clamp((a + kPi) / (2.0 * kPi), 0.0, 1.0);
  });
  CHECK(d < 1.63 / std::sqrt(static_cast<double>(angles.size())));
}

TEST_CASE("wos on the synthesized strip: equal mass on both walls") {
  const DomainArtifact art = synthesize(
      MeasureSpec::builtin("two_point", {{"c", 1.0}}, 8.0), 2048, 8192);
  const BoundaryCurve curve = curve_from_artifact(art);
  WosOptions opts;
  opts.eps = 1e-6;
  opts.n_paths = 20000;
  opts.seed = 5;
  const ExitSampleSet s = wos_exit(curve, {0.0, 0.0}, opts);
  std::size_t left = 0;
  for (const auto& r : s.records) {
    if (r.exit_x < 0.0) ++left;
  }
  const double frac = static_cast<double>(left) /
                      static_cast<double>(s.records.size());
  const double se = 0.5 / std::sqrt(static_cast<double>(s.records.size()));
  CHECK(std::abs(frac - 0.5) <= 3.0 * se);
}

TEST_CASE("backend cross-check on the disk") {
  const auto disk = fixtures::circle(1.0, 4096);
  EulerOptions eo;
  eo.dt = 1e-3;
  eo.n_paths = 20000;
  eo.seed = 1;
  eo.bridge_correction = true;
  WosOptions wo;
  wo.eps = 1e-6;
  wo.n_paths = 20000;
  wo.seed = 2;
  std::vector<double> ae, aw;
  for (const auto& r : euler_exit(disk, {0.0, 0.0}, eo).records) {
    ae.push_back(std::atan2(r.exit_y, r.exit_x));
  }
  for (const auto& r : wos_exit(disk, {0.0, 0.0}, wo).records) {
    aw.push_back(std::atan2(r.exit_y, r.exit_x));
  }
  const double d = ks_statistic_two_sample(ae, aw);
  CHECK(d < 2.0 * 1.63 / std::sqrt(20000.0));
}

TEST_CASE("verify_embedding on the synthesized strip") {
  const MeasureSpec spec =
      MeasureSpec::builtin("two_point", {{"c", 1.0}}, 8.0);
  const DomainArtifact art = synthesize(spec, 2048, 8192);
  VerifyOptions opts;
  opts.backend = Backend::Euler;
  opts.n_paths = 20000;
  opts.dt = 1e-3;
  opts.seed = 12;
  opts.bridge_correction = true;
  const VerifyReport rep = verify_embedding(art, spec, opts);
  CHECK(rep.ks_pass);
  CHECK(rep.mean_time_within_3se);
  CHECK(rep.leakage_ok);
  CHECK(rep.markov_ok);
  CHECK(std::isfinite(rep.tau_p_half_moment.estimate));
  CHECK(rep.tau_p_half_moment.lo <= rep.tau_p_half_moment.hi);
  CHECK_FALSE(rep.power_tail_detected);
}

TEST_CASE("verify_embedding on the uniform target: E[tau] = 1/3") {
  const MeasureSpec spec =
      MeasureSpec::builtin("uniform", {{"a", -1.0}, {"b", 1.0}}, 2.0);
  const DomainArtifact art = synthesize(spec, 2048, 8192);
  VerifyOptions opts;
  opts.backend = Backend::Euler;
  opts.n_paths = 20000;
  opts.dt = 1e-3;
  opts.seed = 21;
  opts.bridge_correction = true;
  const VerifyReport rep = verify_embedding(art, spec, opts);
  CHECK(rep.parseval_etau == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  CHECK(std::abs(rep.mean_exit_time - 1.0 / 3.0) <=
        3.0 * rep.mean_exit_time_se);
  CHECK(rep.ks_pass);
}

TEST_CASE("verify_embedding on the disk fixture: arcsine law") {
  const MeasureSpec spec =
      MeasureSpec::builtin("arcsine", {{"r", 1.0}}, 2.0);
  const DomainArtifact art = synthesize(spec, 1024, 4096);
  VerifyOptions opts;
  opts.backend = Backend::Euler;
  opts.n_paths = 20000;
  opts.dt = 1e-3;
  opts.seed = 31;
  opts.bridge_correction = true;
  const VerifyReport rep = verify_embedding(art, spec, opts);
  CHECK(rep.ks_pass);
  CHECK(std::abs(rep.mean_exit_time - 0.5) <= 3.0 * rep.mean_exit_time_se);
}

TEST_CASE("tail index: quadrant has a unit power tail, bounded domains none") {
  // Quadrant wedge from a symmetric interior start.
  const auto quadrant = fixtures::wedge(kPi / 2.0, 50.0);
  EulerOptions opts;
  opts.dt = 2e-3;
  opts.n_paths = 30000;
  opts.seed = 8;
  opts.max_steps = 500000;
  const ExitSampleSet s =
      euler_exit(quadrant, {std::numbers::sqrt2 / 2.0,
                            std::numbers::sqrt2 / 2.0},
                 opts);
  const double alpha = tail_index(s, 500);
  CHECK(alpha > 0.8);
  CHECK(alpha < 1.2);

  // Disk: exponential tail reads as a huge index ("no power tail").
  const auto disk = fixtures::circle(1.0, 2048);
  EulerOptions dopts;
  dopts.dt = 1e-3;
  dopts.n_paths = 5000;
  dopts.seed = 9;
  const double alpha_disk = tail_index(euler_exit(disk, {0.0, 0.0}, dopts),
                                       100);
  CHECK(alpha_disk > 10.0);

  // Strip: all moments finite as well.
  const auto strip = fixtures::vertical_strip(1.0, 8.0);
  EulerOptions sopts;
  sopts.dt = 1e-3;
  sopts.n_paths = 5000;
  sopts.seed = 10;
  const double alpha_strip =
      tail_index(euler_exit(strip, {0.0, 0.0}, sopts), 100);
  CHECK(alpha_strip > 10.0);
}

TEST_CASE("tail index rejects wos samples") {
  const auto disk = fixtures::circle(1.0, 512);
  WosOptions opts;
  opts.n_paths = 2000;
  opts.seed = 1;
  const ExitSampleSet s = wos_exit(disk, {0.0, 0.0}, opts);
  CHECK_THROWS_AS(tail_index(s, 100), Error);
}

TEST_CASE("markov bound holds on the probe grid") {
  const MeasureSpec spec =
      MeasureSpec::builtin("uniform", {{"a", -1.0}, {"b", 1.0}}, 3.0);
  const DomainArtifact art = synthesize(spec, 1024, 4096);
  VerifyOptions opts;
  opts.backend = Backend::Euler;
  opts.n_paths = 5000;
  opts.dt = 2e-3;
  opts.seed = 77;
  const VerifyReport rep = verify_embedding(art, spec, opts);
  CHECK(rep.markov_ok);
}

TEST_CASE("preconditions") {
  const auto disk = fixtures::circle(1.0, 512);
  EulerOptions opts;
  opts.dt = 0.5;  // above the 1e-2 cap
  CHECK_THROWS_AS(euler_exit(disk, {0.0, 0.0}, opts), Error);
  EulerOptions opts2;
  CHECK_THROWS_AS(euler_exit(disk, {5.0, 0.0}, opts2), Error);

  // Unbounded artifact without a clip window.
  const MeasureSpec g =
      MeasureSpec::builtin("gaussian", {{"sigma", 1.0}}, 2.0);
  const DomainArtifact art = synthesize(g, 1024, 4096);
  VerifyOptions vo;
  CHECK_THROWS_AS(verify_embedding(art, g, vo), Error);
}

TEST_CASE("gaussian target verifies against the clipped domain") {
  const MeasureSpec g =
      MeasureSpec::builtin("gaussian", {{"sigma", 1.0}}, 2.0);
  const DomainArtifact art = synthesize(g, 2048, 8192);
  VerifyOptions vo;
  vo.backend = Backend::Euler;
  vo.n_paths = 20000;
  vo.dt = 1e-3;
  vo.seed = 55;
  vo.bridge_correction = true;
  vo.clip = ClipWindow{6.0, 6.0};
  const VerifyReport rep = verify_embedding(art, g, vo);
  CHECK(rep.leakage_ok);
  CHECK(rep.ks_pass);
  CHECK(std::abs(rep.mean_exit_time - 1.0) <=
        std::max(3.0 * rep.mean_exit_time_se, 0.02));
}
