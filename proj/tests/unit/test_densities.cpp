#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "skembed/densities.hpp"
#include "skembed/errors.hpp"
#include "skembed/simulate.hpp"
#include "skembed/stats.hpp"
#include "support/fixtures.hpp"

using namespace skembed;

namespace {

constexpr double kPi = std::numbers::pi;

double sech(double x) { return 1.0 / std::cosh(x); }

BoundaryDensity upper_strip_line(double half_height = 1.0) {
  BoundaryDensity b;
  b.geom.point = [half_height](double t) {
    return std::complex<double>(t, half_height);
  };
  b.geom.tangent = [](double) { return std::complex<double>(1.0, 0.0); };
  b.rho_arclength = [half_height](double t) {
    return 0.25 / half_height * sech(0.5 * kPi * t / half_height);
  };
  b.t_lo = -1e308;
  b.t_hi = 1e308;
  return b;
}

BoundaryDensity lower_strip_line(double half_height = 1.0) {
  BoundaryDensity b = upper_strip_line(half_height);
  b.geom.point = [half_height](double t) {
    return std::complex<double>(t, -half_height);
  };
  return b;
}

}  // namespace

TEST_CASE("disk boundary density: kernel values and normalization") {
  const DensityCurve center = disk_density({0.0, 0.0});
  for (double v : center.value) {
    CHECK(v == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));
  }
  CHECK(center.normalization == doctest::Approx(1.0).epsilon(1e-9));

  const DensityCurve off = disk_density({0.5, 0.0});
  // Direct kernel evaluation at theta = 0: 0.75/(2 pi 0.25) = 3/(2 pi).
  CHECK(off.evaluator(0.0) ==
        doctest::Approx(3.0 / (2.0 * kPi)).epsilon(1e-12));
  CHECK(off.normalization == doctest::Approx(1.0).epsilon(1e-9));
  for (double v : off.value) CHECK(v >= 0.0);
}

TEST_CASE("disk marginals: arcsine law and the axis-swap identity") {
  const DensityCurve mx = disk_marginal({0.0, 0.0}, Axis::X);
  for (double x : {-0.9, -0.5, 0.0, 0.3, 0.8}) {
    CHECK(mx.evaluator(x) ==
          doctest::Approx(1.0 / (kPi * std::sqrt(1.0 - x * x)))
              .epsilon(1e-12));
  }
  CHECK(mx.normalization == doctest::Approx(1.0).epsilon(1e-6));

  // rho^Y for start a equals rho^X for start -a*i.
  const std::complex<double> a{0.3, 0.2};
  const std::complex<double> rotated = -a * std::complex<double>(0.0, 1.0);
  const DensityCurve my = disk_marginal(a, Axis::Y);
  const DensityCurve mx2 = disk_marginal(rotated, Axis::X);
  for (double t = -0.95; t <= 0.95; t += 0.05) {
    CHECK(std::abs(my.evaluator(t) - mx2.evaluator(t)) < 1e-9);
  }
  CHECK(my.normalization == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("strip density: value conventions and mass split") {
  const DensityCurve line = strip_line_density();
  const DensityCurve marg = strip_x_marginal();
  // The combined-lines marginal evaluates to 1/2 at 0; each line carries
  // half of that.
  CHECK(marg.evaluator(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(line.evaluator(0.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(marg.evaluator(1.3) == doctest::Approx(marg.evaluator(-1.3)));
  // One line integrates to 1/2, both lines to 1.
  CHECK(line.normalization == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(marg.normalization == doctest::Approx(1.0).epsilon(1e-9));
  // Closed-form CDF: 1/2 + arctan(sinh(pi x/2))/pi.
  for (double x : {-2.0, -0.7, 0.0, 0.4, 1.9}) {
    const double want = 0.5 + std::atan(std::sinh(0.5 * kPi * x)) / kPi;
    CHECK(marg.cdf(x) == doctest::Approx(want).epsilon(1e-6));
  }
}

TEST_CASE("strip mass convention is the one the simulation sees") {
  // Euler exits from the horizontal strip {|Im z| < 1}: Re(exit) follows
  // sech(pi x/2)/2 and each line carries half the paths.
  const auto strip = fixtures::horizontal_strip(1.0, 10.0);
  EulerOptions opts;
  opts.dt = 1e-3;
  opts.n_paths = 20000;
  opts.seed = 64;
  opts.bridge_correction = true;
  const ExitSampleSet s = euler_exit(strip, {0.0, 0.0}, opts);
  const DensityCurve marg = strip_x_marginal();
  std::vector<double> xs;
  std::size_t upper = 0;
  for (const auto& r : s.records) {
    xs.push_back(r.exit_x);
    if (r.exit_y > 0.0) ++upper;
  }
  const double d = ks_statistic(xs, [&](double x) { return marg.cdf(x); });
  CHECK(d < 1.63 / std::sqrt(static_cast<double>(xs.size())));
  const double frac = static_cast<double>(upper) /
                      static_cast<double>(s.records.size());
  CHECK(std::abs(frac - 0.5) <=
        3.0 * 0.5 / std::sqrt(static_cast<double>(s.records.size())));
}

TEST_CASE("parabola marginals: closed forms and normalization") {
  const DensityCurve px = parabola_x_marginal();
  const DensityCurve py = parabola_y_marginal();
  CHECK(px.normalization == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(py.normalization == doctest::Approx(1.0).epsilon(1e-6));
  for (double u : {-0.9, 0.0, 1.0, 5.0}) {
    const double s = std::sqrt(u + 1.0);
    CHECK(px.evaluator(u) ==
          doctest::Approx(sech(0.5 * kPi * s) / (2.0 * s)).epsilon(1e-12));
  }
  for (double v : {-3.0, 0.0, 2.5}) {
    CHECK(py.evaluator(v) ==
          doctest::Approx(0.25 * sech(0.25 * kPi * v)).epsilon(1e-12));
  }
  // CDF closed form for the X marginal.
  for (double u : {-0.5, 0.0, 2.0, 10.0}) {
    const double want =
        4.0 / kPi * std::atan(std::tanh(0.25 * kPi * std::sqrt(u + 1.0)));
    CHECK(px.cdf(u) == doctest::Approx(want).epsilon(1e-6));
  }
}

TEST_CASE("pushforward: identity map leaves a density unchanged") {
  BoundaryDensity disk;
  disk.geom.point = [](double t) { return std::polar(1.0, t); };
  disk.geom.tangent = [](double t) {
    return std::complex<double>(0.0, 1.0) * std::polar(1.0, t);
  };
  disk.rho_arclength = [](double) { return 1.0 / (2.0 * kPi); };
  disk.t_lo = -kPi;
  disk.t_hi = kPi;
  std::vector<PreimageBranch> branches;
  branches.push_back({&disk, [](double s) { return s; }});
  const BoundaryDensity same = pushforward_density(
      disk.geom, branches, [](std::complex<double>) {
        return std::complex<double>(1.0, 0.0);
      },
      -kPi, kPi);
  for (double t = -3.0; t <= 3.0; t += 0.37) {
    CHECK(same.rho_arclength(t) ==
          doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));
  }
}

TEST_CASE("pushforward: strip through z^2 gives the parabola density") {
  const BoundaryDensity upper = upper_strip_line();
  const BoundaryDensity lower = lower_strip_line();
  CurveGeometry parabola;
  parabola.point = [](double v) {
    return std::complex<double>(v * v / 4.0 - 1.0, v);
  };
  parabola.tangent = [](double v) {
    return std::complex<double>(v / 2.0, 1.0);
  };
  std::vector<PreimageBranch> branches;
  branches.push_back({&upper, [](double v) { return v / 2.0; }});
  branches.push_back({&lower, [](double v) { return -v / 2.0; }});
  const BoundaryDensity pb = pushforward_density(
      parabola, branches,
      [](std::complex<double> z) { return 2.0 * z; }, -1e308, 1e308);

  // Boundary density: sech(pi v/4) / (4 sqrt(v^2/4 + 1)).
  for (double v : {-6.0, -1.0, 0.0, 0.5, 3.0, 9.0}) {
    const double want = sech(0.25 * kPi * v) /
                        (4.0 * std::sqrt(v * v / 4.0 + 1.0));
    CHECK(std::abs(pb.rho_arclength(v) - want) < 1e-12);
  }

  // The Y marginal through the independent engine path reproduces
  // sech(pi v/4)/4 to 1e-9.
  const auto rho_y =
      marginalize(pb, Axis::Y, {[](double y) { return y; }});
  for (double v = -12.0; v <= 12.0; v += 0.125) {
    CHECK(std::abs(rho_y(v) - 0.25 * sech(0.25 * kPi * v)) < 1e-9);
  }
}

TEST_CASE("pushforward: half-plane through sqrt gives the hyperbola law") {
  const double delta = 2.0;
  BoundaryDensity half_plane;
  half_plane.geom.point = [](double t) {
    return std::complex<double>(1.0, t);
  };
  half_plane.geom.tangent = [](double) {
    return std::complex<double>(0.0, 1.0);
  };
  half_plane.rho_arclength = [delta](double t) {
    const double d1 = delta - 1.0;
    return d1 / (kPi * (d1 * d1 + t * t));
  };
  half_plane.t_lo = -1e308;
  half_plane.t_hi = 1e308;

  CurveGeometry hyperbola;
  hyperbola.point = [](double y) {
    return std::complex<double>(std::sqrt(1.0 + y * y), y);
  };
  hyperbola.tangent = [](double y) {
    return std::complex<double>(y / std::sqrt(1.0 + y * y), 1.0);
  };
  std::vector<PreimageBranch> branches;
  branches.push_back(
      {&half_plane, [](double y) { return 2.0 * y * std::sqrt(1.0 + y * y); }});
  // Inverse map sqrt: derivative 1/(2 sqrt(w)) at w on the line Re = 1.
  const BoundaryDensity hb = pushforward_density(
      hyperbola, branches,
      [](std::complex<double> w) { return 0.5 / std::sqrt(w); }, -1e308,
      1e308);

  const auto rho_y = marginalize(hb, Axis::Y, {[](double y) { return y; }});
  const HyperbolaDensity closed = hyperbola_density(delta);
  for (double y = -8.0; y <= 8.0; y += 0.0625) {
    CHECK(std::abs(rho_y(y) - closed.y_marginal.evaluator(y)) < 1e-9);
  }
}

TEST_CASE("marginalizing the disk boundary recovers the arcsine law") {
  BoundaryDensity disk;
  disk.geom.point = [](double t) { return std::polar(1.0, t); };
  disk.geom.tangent = [](double t) {
    return std::complex<double>(0.0, 1.0) * std::polar(1.0, t);
  };
  disk.rho_arclength = [](double) { return 1.0 / (2.0 * kPi); };
  const auto rho_x = marginalize(
      disk, Axis::X,
      {[](double x) { return std::acos(x); },
       [](double x) { return -std::acos(x); }});
  for (double x : {-0.9, -0.4, 0.0, 0.6, 0.95}) {
    CHECK(std::abs(rho_x(x) - 1.0 / (kPi * std::sqrt(1.0 - x * x))) < 1e-9);
  }
  // Vertical tangent at the edge.
  CHECK_THROWS_AS(rho_x(1.0), Error);
}

TEST_CASE("pushforward flags critical points") {
  BoundaryDensity line;
  line.geom.point = [](double t) { return std::complex<double>(t, 0.0); };
  line.geom.tangent = [](double) { return std::complex<double>(1.0, 0.0); };
  line.rho_arclength = [](double) { return 1.0; };
  std::vector<PreimageBranch> branches;
  branches.push_back({&line, [](double) { return 0.0; }});
  const BoundaryDensity img = pushforward_density(
      line.geom, branches,
      [](std::complex<double> z) { return 2.0 * z; }, -1.0, 1.0);
  CHECK_THROWS_AS(img.rho_arclength(0.5), Error);
}

TEST_CASE("ellipse density: normalization, symmetry, and both routes") {
  const double R = 1.0;
  const EllipseDensity ed = ellipse_density(R);
  CHECK(ed.boundary.normalization == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(ed.tail_bound < 1e-10);
  // Even in the strip parameter through the mirrored preimage family.
  for (double x0 : {0.3, 0.9, 2.0}) {
    CHECK(ed.boundary.evaluator(x0) ==
          doctest::Approx(ed.boundary.evaluator(-x0)).epsilon(1e-12));
  }

  // Independent route: transport both strip lines through sin(z) by the
  // pushforward engine and compare at interior points.
  const BoundaryDensity upper = upper_strip_line(R);
  const BoundaryDensity lower = lower_strip_line(R);
  const double ch = std::cosh(R), sh = std::sinh(R);
  CurveGeometry ellipse;
  ellipse.point = [ch, sh](double x0) {
    return std::complex<double>(ch * std::sin(x0), sh * std::cos(x0));
  };
  ellipse.tangent = [ch, sh](double x0) {
    return std::complex<double>(ch * std::cos(x0), -sh * std::sin(x0));
  };
  // At target parameter x0 (upper-line preimage convention), the preimages
  // within one period are x0 on the upper line and pi - x0 on the lower.
  // The remaining periodic copies are summed by the closed form; the engine
  // route folds them in through explicit extra branches.
  std::vector<PreimageBranch> branches;
  const int copies = 4;
  for (int n = -copies; n <= copies; ++n) {
    branches.push_back(
        {&upper, [n](double x0) { return x0 + 2.0 * kPi * n; }});
    branches.push_back(
        {&lower, [n](double x0) { return kPi - x0 + 2.0 * kPi * n; }});
  }
  const BoundaryDensity eb = pushforward_density(
      ellipse, branches,
      [](std::complex<double> z) { return std::cos(z); }, -kPi, kPi);
  for (double x0 : {-2.5, -1.0, 0.0, 0.7, 1.8}) {
    const double u = ch * std::sin(x0);
    const double engine = eb.rho_arclength(x0);
    const double closed = ed.boundary.evaluator(x0) /
                          std::sqrt(ch * ch - u * u);
    CHECK(std::abs(engine - closed) < 1e-9);
    const double via_rho_at = ed.rho_at(u, std::cos(x0) >= 0.0);
    CHECK(std::abs(via_rho_at - closed) < 1e-12);
  }
  CHECK_THROWS_AS(ed.rho_at(std::cosh(R), true), Error);
}

TEST_CASE("hyperbola marginals: values and normalization") {
  const double delta = 2.0;
  const HyperbolaDensity hd = hyperbola_density(delta);
  CHECK(hd.y_marginal.evaluator(0.0) ==
        doctest::Approx(2.0 / (kPi * (delta - 1.0))).epsilon(1e-12));
  CHECK(hd.y_marginal.normalization == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(hd.x_marginal.normalization == doctest::Approx(1.0).epsilon(1e-6));
  for (double y : {-2.0, 0.5, 3.0}) {
    CHECK(hd.y_marginal.evaluator(y) >= 0.0);
  }
}

TEST_CASE("wos samples match the parabola marginals") {
  const auto domain = fixtures::parabola_domain(18.0, 4096);
  WosOptions opts;
  opts.eps = 1e-6;
  opts.n_paths = 20000;
  opts.seed = 1234;
  const ExitSampleSet s = wos_exit(domain, {0.0, 0.0}, opts);
  CHECK(s.leakage_fraction() < 0.005);
  const DensityCurve px = parabola_x_marginal();
  const DensityCurve py = parabola_y_marginal();
  std::vector<double> xs, ys;
  for (const auto& r : s.records) {
    if (r.through_frame) continue;
    xs.push_back(r.exit_x);
    ys.push_back(r.exit_y);
  }
  const double threshold = 1.63 / std::sqrt(static_cast<double>(xs.size()));
  CHECK(ks_statistic(xs, [&](double x) { return px.cdf(x); }) < threshold);
  CHECK(ks_statistic(ys, [&](double y) { return py.cdf(y); }) < threshold);
}

TEST_CASE("wos samples match the ellipse boundary law") {
  const double R = 1.0;
  const auto domain = fixtures::ellipse_domain(R, 8192);
  WosOptions opts;
  opts.eps = 1e-7;
  opts.n_paths = 20000;
  opts.seed = 4321;
  const ExitSampleSet s = wos_exit(domain, {0.0, 0.0}, opts);
  const EllipseDensity ed = ellipse_density(R);
  std::vector<double> params;
  for (const auto& r : s.records) {
    params.push_back(EllipseDensity::param_of(r.exit_x, r.exit_y, R));
  }
  const double threshold =
      1.63 / std::sqrt(static_cast<double>(params.size()));
  CHECK(ks_statistic(params, [&](double t) { return ed.boundary.cdf(t); }) <
        threshold);
}

TEST_CASE("wos samples match the hyperbola marginals") {
  const double delta = 2.0;
  const auto domain = fixtures::hyperbola_domain(40.0, 4096);
  WosOptions opts;
  opts.eps = 1e-6;
  opts.n_paths = 20000;
  opts.seed = 99;
  const ExitSampleSet s =
      wos_exit(domain, {std::sqrt(delta), 0.0}, opts);
  CHECK(s.leakage_fraction() < 0.005);
  const HyperbolaDensity hd = hyperbola_density(delta);
  std::vector<double> xs, ys;
  for (const auto& r : s.records) {
    if (r.through_frame) continue;
    xs.push_back(r.exit_x);
    ys.push_back(r.exit_y);
  }
  const double threshold = 1.63 / std::sqrt(static_cast<double>(xs.size()));
  CHECK(ks_statistic(xs, [&](double x) { return hd.x_marginal.cdf(x); }) <
        threshold);
  CHECK(ks_statistic(ys, [&](double y) { return hd.y_marginal.cdf(y); }) <
        threshold);
}
