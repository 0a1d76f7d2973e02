#ifndef SKEMBED_DENSITIES_HPP
#define SKEMBED_DENSITIES_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace skembed {

// Exit-position density along a one-parameter family (a boundary curve or an
// axis marginal). `value` is the density with respect to the stored
// parameter, so integrating value over param recovers total mass 1.
struct DensityCurve {
  std::string domain_tag;    // disk | strip | parabola | ellipse | hyperbola | ...
  std::string marginal_tag;  // boundary | X | Y
  double lo = 0.0;           // parameter support (may be +-inf)
  double hi = 0.0;
  bool singular_lo = false;  // integrable 1/sqrt edge at lo / hi
  bool singular_hi = false;
  std::function<double(double)> evaluator;
  std::vector<double> param;  // plot/CSV grid (finite window)
  std::vector<double> value;
  double normalization = 0.0;  // computed integral of evaluator over support
  double series_tail_bound = 0.0;  // for series densities

  double cdf(double x) const;  // cached numeric CDF (built on first use)

  void build_cdf(std::size_t table_size = 4096) const;

 private:
  mutable std::vector<double> cdf_x_, cdf_f_;
};

// Tabulates the evaluator on a finite window, computes the normalization
// over the mathematical support, and prepares the curve for KS use.
DensityCurve make_density(std::string domain_tag, std::string marginal_tag,
                          std::function<double(double)> evaluator, double lo,
                          double hi, bool singular_lo, bool singular_hi,
                          double window_lo, double window_hi,
                          std::size_t grid_n = 1024);

// ---- pushforward engine ------------------------------------------------

// Parameterized boundary curve with analytic tangent.
struct CurveGeometry {
  std::function<std::complex<double>(double)> point;    // w(t)
  std::function<std::complex<double>(double)> tangent;  // dw/dt
};

// Density on a parameterized boundary, stored with respect to arclength.
struct BoundaryDensity {
  CurveGeometry geom;
  std::function<double(double)> rho_arclength;
  double t_lo = 0.0;
  double t_hi = 0.0;
};

// One preimage branch of an analytic map f: maps a target parameter to the
// source parameter of a preimage point.
struct PreimageBranch {
  const BoundaryDensity* source = nullptr;
  std::function<double(double)> param_map;
};

// Image density of f(X) on the target curve: at target parameter s,
// sum over branches of rho_src(t_b(s)) / |f'(z_src(t_b(s)))|.
// Evaluating at a critical point of f throws DerivativeVanishes.
BoundaryDensity pushforward_density(
    CurveGeometry target, std::vector<PreimageBranch> branches,
    std::function<std::complex<double>(std::complex<double>)> f_derivative,
    double t_lo, double t_hi);

enum class Axis { X, Y };

// Axis marginal of a boundary density: at axis value v, the arclength-
// weighted sum over the branches t_b(v) of the boundary parameter.
// Evaluating where the boundary tangent is perpendicular to the axis throws
// VerticalTangent.
std::function<double(double)> marginalize(
    const BoundaryDensity& boundary, Axis axis,
    std::vector<std::function<double(double)>> branches);

// ---- closed-form catalog -------------------------------------------------

// Exit density of the unit disk from start a (|a| < 1), on the angle
// parameter theta in [-pi, pi).
DensityCurve disk_density(std::complex<double> a);

// X or Y marginal of the unit-disk exit position from start a.
DensityCurve disk_marginal(std::complex<double> a, Axis axis);

// Exit-position law of the strip {|Im z| < 1} from 0. The boundary density
// per line is sech(pi x/2)/4 (each line carries mass 1/2); the X marginal,
// combining both lines, is sech(pi x/2)/2.
DensityCurve strip_line_density();
DensityCurve strip_x_marginal();

// Parabola {x > y^2/4 - 1} from 0.
DensityCurve parabola_boundary_density();  // parameter: v = Im along boundary
DensityCurve parabola_x_marginal();        // on (-1, inf)
DensityCurve parabola_y_marginal();        // sech(pi v/4)/4 on R

struct EllipseDensity {
  DensityCurve boundary;  // parameter: strip coordinate x0 in [-pi, pi)
  double R = 0.0;
  int n_terms = 0;
  double tail_bound = 0.0;

  // Density w.r.t. arclength at the boundary point with Re = u on the upper
  // (v >= 0) or lower half. Singular exactly at |u| = cosh R.
  double rho_at(double u, bool upper) const;

  // Strip parameter of a boundary point (u, v); inverse of the sin map.
  static double param_of(double u, double v, double R);
};

// Exit density of the ellipse x^2/cosh^2 R + y^2/sinh^2 R = 1 from 0,
// as transported from the strip {|Im| < R} through the sine map.
EllipseDensity ellipse_density(double R, int n_terms = 0);

struct HyperbolaDensity {
  DensityCurve x_marginal;  // on (1, inf), edge singularity at 1
  DensityCurve y_marginal;  // on R
  double delta = 0.0;       // half-plane start; region start is sqrt(delta)
};

// Exit marginals of the region right of the hyperbola x^2 - y^2 = 1,
// started at sqrt(delta) on the real axis (delta > 1).
HyperbolaDensity hyperbola_density(double delta);

}  // namespace skembed

#endif  // SKEMBED_DENSITIES_HPP
