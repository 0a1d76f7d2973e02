#include "skembed/densities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "skembed/errors.hpp"
#include "skembed/quadrature.hpp"

namespace skembed {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sech(double x) { return 1.0 / std::cosh(x); }

// Mass of the evaluator over [a, b] respecting edge singularities and
// infinite endpoints.
double support_integral(const std::function<double(double)>& ev, double a,
                        double b, bool sing_a, bool sing_b) {
  const QuadratureOptions opts{1e-10, 1e-13, 48};
  if (std::isfinite(a) && std::isfinite(b)) {
    return integrate_sqrt_edges(ev, a, b, sing_a, sing_b, opts);
  }
  if (!std::isfinite(a) && !std::isfinite(b)) {
    return integrate_real_line(ev, opts);
  }
  if (std::isfinite(a)) {
    const double split = a + std::max(1.0, std::abs(a));
    return integrate_sqrt_edges(ev, a, split, sing_a, false, opts) +
           integrate_half_line(ev, split, opts);
  }
  // a = -inf, b finite: mirror.
  const double split = b - std::max(1.0, std::abs(b));
  return integrate_sqrt_edges([&](double x) { return ev(-x); }, -b, -split,
                              sing_b, false, opts) +
         integrate_half_line([&](double x) { return ev(-x); }, -split, opts);
}

}  // namespace

void DensityCurve::build_cdf(std::size_t) const {
  if (!cdf_x_.empty()) return;
  if (param.size() < 8) {
    fail(ErrorCode::InvalidArgument, "density grid too small for a CDF");
  }
  cdf_x_ = param;
  cdf_f_.resize(param.size());
  // Mass strictly left of the first grid point.
  double left;
  if (std::isfinite(lo)) {
    left = integrate_sqrt_edges(evaluator, lo, param.front(), singular_lo,
                                false);
  } else {
    double inside = 0.0;
    for (std::size_t i = 1; i < param.size(); ++i) {
      inside += integrate(evaluator, param[i - 1], param[i]);
    }
    const double right =
        std::isfinite(hi)
            ? integrate_sqrt_edges(evaluator, param.back(), hi, false,
                                   singular_hi)
            : integrate_half_line(evaluator, param.back());
    left = normalization - inside - right;
  }
  cdf_f_[0] = left;
  for (std::size_t i = 1; i < param.size(); ++i) {
    cdf_f_[i] = cdf_f_[i - 1] + integrate(evaluator, param[i - 1], param[i]);
  }
  for (double& f : cdf_f_) f = std::clamp(f / normalization, 0.0, 1.0);
}

double DensityCurve::cdf(double x) const {
  build_cdf();
  if (x <= cdf_x_.front()) {
    if (std::isfinite(lo) && x > lo) {
      const double t = (x - lo) / (cdf_x_.front() - lo);
      return t * cdf_f_.front();
    }
    return x <= lo ? 0.0 : cdf_f_.front();
  }
  if (x >= cdf_x_.back()) {
    if (std::isfinite(hi) && x < hi) return cdf_f_.back();
    return x >= hi ? 1.0 : cdf_f_.back();
  }
  const auto it = std::upper_bound(cdf_x_.begin(), cdf_x_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - cdf_x_.begin());
  const double t = (x - cdf_x_[i - 1]) / (cdf_x_[i] - cdf_x_[i - 1]);
  return cdf_f_[i - 1] + t * (cdf_f_[i] - cdf_f_[i - 1]);
}

DensityCurve make_density(std::string domain_tag, std::string marginal_tag,
                          std::function<double(double)> evaluator, double lo,
                          double hi, bool singular_lo, bool singular_hi,
                          double window_lo, double window_hi,
                          std::size_t grid_n) {
  DensityCurve curve;
  curve.domain_tag = std::move(domain_tag);
  curve.marginal_tag = std::move(marginal_tag);
  curve.evaluator = std::move(evaluator);
  curve.lo = lo;
  curve.hi = hi;
  curve.singular_lo = singular_lo;
  curve.singular_hi = singular_hi;

  // Half-offset grid graded toward singular edges; exact endpoints are never
  // evaluated.
  const auto grade = [&](double t) {
    if (singular_lo && singular_hi) return 0.5 * (1.0 - std::cos(kPi * t));
    if (singular_lo) return t * t;
    if (singular_hi) return 1.0 - (1.0 - t) * (1.0 - t);
    return t;
  };
  curve.param.resize(grid_n);
  curve.value.resize(grid_n);
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(grid_n);
    const double x = window_lo + (window_hi - window_lo) * grade(t);
    curve.param[i] = x;
    curve.value[i] = curve.evaluator(x);
  }
  curve.normalization =
      support_integral(curve.evaluator, lo, hi, singular_lo, singular_hi);
  return curve;
}

// ---- pushforward engine ----------------------------------------------------

BoundaryDensity pushforward_density(
    CurveGeometry target, std::vector<PreimageBranch> branches,
    std::function<std::complex<double>(std::complex<double>)> f_derivative,
    double t_lo, double t_hi) {
  if (branches.empty()) {
    fail(ErrorCode::InvalidArgument, "pushforward needs >= 1 branch");
  }
  BoundaryDensity out;
  out.geom = target;
  out.t_lo = t_lo;
  out.t_hi = t_hi;
  out.rho_arclength = [branches, f_derivative](double s) {
    double total = 0.0;
    for (const auto& br : branches) {
      const double t = br.param_map(s);
      const std::complex<double> z = br.source->geom.point(t);
      const double fp = std::abs(f_derivative(z));
      if (!(fp > 1e-300)) {
        fail(ErrorCode::DerivativeVanishes,
             "pushforward evaluated at a critical point of the map");
      }
      total += br.source->rho_arclength(t) / fp;
    }
    return total;
  };
  return out;
}

std::function<double(double)> marginalize(
    const BoundaryDensity& boundary, Axis axis,
    std::vector<std::function<double(double)>> branches) {
  if (branches.empty()) {
    fail(ErrorCode::InvalidArgument, "marginalize needs >= 1 branch");
  }
  const CurveGeometry geom = boundary.geom;
  const auto rho = boundary.rho_arclength;
  return [geom, rho, axis, branches](double v) {
    double total = 0.0;
    for (const auto& br : branches) {
      const double t = br(v);
      const std::complex<double> tan = geom.tangent(t);
      const double speed = std::abs(tan);
      const double axis_rate =
          axis == Axis::X ? std::abs(tan.real()) : std::abs(tan.imag());
      if (!(axis_rate > 1e-300)) {
        fail(ErrorCode::VerticalTangent,
             "marginal evaluated where the boundary tangent is perpendicular "
             "to the axis");
      }
      total += rho(t) * speed / axis_rate;
    }
    return total;
  };
}

// ---- closed-form catalog ---------------------------------------------------

DensityCurve disk_density(std::complex<double> a) {
  if (!(std::abs(a) < 1.0)) {
    fail(ErrorCode::InvalidArgument, "disk start must satisfy |a| < 1");
  }
  const double num = 1.0 - std::norm(a);
  const std::complex<double> abar = std::conj(a);
  auto ev = [num, abar](double theta) {
    const std::complex<double> z = std::polar(1.0, theta);
    return num / (2.0 * kPi * std::norm(1.0 - abar * z));
  };
  return make_density("disk", "boundary", ev, -kPi, kPi, false, false, -kPi,
                      kPi);
}

DensityCurve disk_marginal(std::complex<double> a, Axis axis) {
  if (!(std::abs(a) < 1.0)) {
    fail(ErrorCode::InvalidArgument, "disk start must satisfy |a| < 1");
  }
  const double num = 1.0 - std::norm(a);
  const std::complex<double> abar = std::conj(a);
  std::function<double(double)> ev;
  if (axis == Axis::X) {
    ev = [num, abar](double x) {
      const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
      const std::complex<double> zp(x, s), zm(x, -s);
      return num / (2.0 * kPi * s) *
             (1.0 / std::norm(1.0 - abar * zp) +
              1.0 / std::norm(1.0 - abar * zm));
    };
  } else {
    ev = [num, abar](double y) {
      const double s = std::sqrt(std::max(0.0, 1.0 - y * y));
      const std::complex<double> zp(s, y), zm(-s, y);
      return num / (2.0 * kPi * s) *
             (1.0 / std::norm(1.0 - abar * zp) +
              1.0 / std::norm(1.0 - abar * zm));
    };
  }
  return make_density("disk", axis == Axis::X ? "X" : "Y", ev, -1.0, 1.0, true,
                      true, -1.0, 1.0);
}

DensityCurve strip_line_density() {
  // Per-line density; each horizontal line of {|Im z| < 1} carries mass 1/2.
  auto ev = [](double x) { return 0.25 * sech(0.5 * kPi * x); };
  return make_density("strip", "boundary", ev, -kInf, kInf, false, false,
                      -12.0, 12.0);
}

DensityCurve strip_x_marginal() {
  auto ev = [](double x) { return 0.5 * sech(0.5 * kPi * x); };
  return make_density("strip", "X", ev, -kInf, kInf, false, false, -12.0,
                      12.0);
}

DensityCurve parabola_boundary_density() {
  // Parameterized by v; the stored value is density w.r.t. v (arclength
  // density sech(pi v/4) / (4 sqrt(v^2/4+1)) times |dw/dv|).
  auto ev = [](double v) { return 0.25 * sech(0.25 * kPi * v); };
  return make_density("parabola", "boundary", ev, -kInf, kInf, false, false,
                      -24.0, 24.0);
}

DensityCurve parabola_x_marginal() {
  auto ev = [](double u) {
    const double s = std::sqrt(u + 1.0);
    return sech(0.5 * kPi * s) / (2.0 * s);
  };
  return make_density("parabola", "X", ev, -1.0, kInf, true, false, -1.0,
                      40.0);
}

DensityCurve parabola_y_marginal() {
  auto ev = [](double v) { return 0.25 * sech(0.25 * kPi * v); };
  return make_density("parabola", "Y", ev, -kInf, kInf, false, false, -24.0,
                      24.0);
}

double EllipseDensity::param_of(double u, double v, double R) {
  return std::atan2(u / std::cosh(R), v / std::sinh(R));
}

double EllipseDensity::rho_at(double u, bool upper) const {
  const double ch = std::cosh(R);
  if (!(std::abs(u) < ch)) {
    fail(ErrorCode::EdgeSingularity,
         "ellipse boundary density is singular at |u| = cosh R");
  }
  const double x0raw = std::asin(u / ch);
  const double x0 = upper ? x0raw : kPi - x0raw;
  // boundary.evaluator stores density w.r.t. the strip parameter; divide by
  // |dw/dx0| = sqrt(cosh^2 R - u^2) to get the arclength density.
  return boundary.evaluator(x0 > kPi ? x0 - 2.0 * kPi : x0) /
         std::sqrt(ch * ch - u * u);
}

EllipseDensity ellipse_density(double R, int n_terms) {
  if (!(R > 0.0)) fail(ErrorCode::InvalidArgument, "ellipse needs R > 0");
  const double c = 0.5 * kPi / R;  // sech argument scale on the strip
  // Series term count: geometric decay with ratio exp(-2 pi c) per step.
  const double ratio = std::exp(-2.0 * kPi * c);
  int terms = n_terms;
  if (terms <= 0) {
    terms = 3;
    double tail = 2.0 * std::exp(-c * (2.0 * kPi * terms - 2.0 * kPi)) /
                  (1.0 - ratio);
    while (tail > 1e-12 && terms < 64) {
      ++terms;
      tail *= ratio;
    }
  }
  const int K = terms;
  // Both preimage families: x0 + 2 pi n on the upper strip line and
  // (pi - x0) + 2 pi n on the lower one.
  auto series = [c, K](double x0) {
    double s = 0.0;
    for (int n = -K; n <= K; ++n) {
      const double arg1 = c * (x0 + 2.0 * kPi * n);
      const double arg2 = c * (kPi - x0 + 2.0 * kPi * n);
      s += sech(arg1) + sech(arg2);
    }
    return s;
  };
  auto ev = [series, R](double x0) { return series(x0) / (4.0 * R); };

  EllipseDensity out;
  out.R = R;
  out.n_terms = K;
  out.tail_bound =
      8.0 * std::exp(-c * (2.0 * kPi * (K + 1) - kPi)) / (1.0 - ratio);
  out.boundary = make_density("ellipse", "boundary", ev, -kPi, kPi, false,
                              false, -kPi, kPi);
  return out;
}

HyperbolaDensity hyperbola_density(double delta) {
  if (!(delta > 1.0)) {
    fail(ErrorCode::InvalidArgument, "hyperbola start requires delta > 1");
  }
  const double d1 = delta - 1.0;
  auto ev_x = [d1](double x) {
    const double root = std::sqrt(x * x - 1.0);
    const double den = d1 * d1 + 4.0 * x * x * (x * x - 1.0);
    return (2.0 * d1 / kPi) * ((2.0 * x * x - 1.0) / root) * (2.0 / den);
  };
  auto ev_y = [d1](double y) {
    const double den = d1 * d1 + 4.0 * y * y * (y * y + 1.0);
    return (2.0 * d1 / kPi) * (2.0 * y * y + 1.0) /
           (std::sqrt(1.0 + y * y) * den);
  };
  HyperbolaDensity out;
  out.delta = delta;
  out.x_marginal = make_density("hyperbola", "X", ev_x, 1.0, kInf, true, false,
                                1.0, 60.0);
  out.y_marginal = make_density("hyperbola", "Y", ev_y, -kInf, kInf, false,
                                false, -60.0, 60.0);
  return out;
}

}  // namespace skembed
