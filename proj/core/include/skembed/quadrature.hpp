#ifndef SKEMBED_QUADRATURE_HPP
#define SKEMBED_QUADRATURE_HPP

#include <functional>

namespace skembed {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_depth = 48;
};

// Adaptive Simpson on [a, b]. Throws QuadratureFailure when the refinement
// depth limit is hit before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

// Integral of f over [a, b] where f has an integrable 1/sqrt singularity at
// one or both endpoints. Singular edges are handled by the substitution
// x = edge -/+ s^2, which restores a polynomial integrand.
double integrate_sqrt_edges(const std::function<double(double)>& f, double a,
                            double b, bool singular_at_a, bool singular_at_b,
                            const QuadratureOptions& opts = {});

// Integral of f over the whole real line via x = tan(u).
double integrate_real_line(const std::function<double(double)>& f,
                           const QuadratureOptions& opts = {});

// Integral of f over [a, +inf) via x = a + tan(u).
double integrate_half_line(const std::function<double(double)>& f, double a,
                           const QuadratureOptions& opts = {});

}  // namespace skembed

#endif  // SKEMBED_QUADRATURE_HPP
