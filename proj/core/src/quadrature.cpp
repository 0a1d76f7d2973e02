#include "skembed/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "skembed/errors.hpp"

namespace skembed {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double tol,
             int depth, const QuadratureOptions& opts) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-15 * (std::abs(a) + 1.0)) {
    return left + right + delta / 15.0;
  }
  if (depth >= opts.max_depth) {
    fail(ErrorCode::QuadratureFailure,
         "adaptive quadrature hit the refinement depth limit");
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, opts) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, opts);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  const double tol =
      std::max(opts.abs_tol, opts.rel_tol * std::max(std::abs(whole), 1e-30));
  return adapt(f, a, b, fa, fm, fb, whole, tol, 0, opts);
}

double integrate_sqrt_edges(const std::function<double(double)>& f, double a,
                            double b, bool singular_at_a, bool singular_at_b,
                            const QuadratureOptions& opts) {
  if (!singular_at_a && !singular_at_b) return integrate(f, a, b, opts);
  const double m = 0.5 * (a + b);
  double total = 0.0;
  if (singular_at_a) {
    // x = a + s^2, dx = 2s ds over s in (0, sqrt(m - a)]
    const double smax = std::sqrt(m - a);
    total += integrate([&](double s) { return 2.0 * s * f(a + s * s); }, 0.0,
                       smax, opts);
  } else {
    total += integrate(f, a, m, opts);
  }
  if (singular_at_b) {
    const double smax = std::sqrt(b - m);
    total += integrate([&](double s) { return 2.0 * s * f(b - s * s); }, 0.0,
                       smax, opts);
  } else {
    total += integrate(f, m, b, opts);
  }
  return total;
}

double integrate_real_line(const std::function<double(double)>& f,
                           const QuadratureOptions& opts) {
  const double h = std::numbers::pi / 2.0 - 1e-9;
  return integrate(
      [&](double u) {
        const double c = std::cos(u);
        return f(std::tan(u)) / (c * c);
      },
      -h, h, opts);
}

double integrate_half_line(const std::function<double(double)>& f, double a,
                           const QuadratureOptions& opts) {
  const double h = std::numbers::pi / 2.0 - 1e-9;
  return integrate(
      [&](double u) {
        const double c = std::cos(u);
        return f(a + std::tan(u)) / (c * c);
      },
      0.0, h, opts);
}

}  // namespace skembed
