#ifndef SKEMBED_HILBERT_HPP
#define SKEMBED_HILBERT_HPP

#include <functional>
#include <vector>

namespace skembed {

// A 2*pi-periodic function sampled on the half-offset grid
//   theta_j = -pi + (j + 1/2) * 2*pi / M,   j = 0..M-1,
// which keeps theta = 0 and theta = +-pi strictly between grid points. M must
// be a power of two (>= 8) so the trigonometric transforms run fast.
//
// An optional pointwise evaluator rides along; the principal-value transform
// quadrature uses it when present and falls back to periodic linear
// interpolation of the samples otherwise.
class PeriodicFunction {
 public:
  static PeriodicFunction from_samples(std::vector<double> values);
  static PeriodicFunction from_function(std::function<double(double)> f,
                                        std::size_t m);

  std::size_t size() const { return values_.size(); }
  double theta(std::size_t j) const;
  const std::vector<double>& values() const { return values_; }
  bool has_evaluator() const { return static_cast<bool>(evaluator_); }

  // Pointwise value: evaluator if attached, else periodic linear
  // interpolation of the grid samples.
  double evaluate(double theta) const;

 private:
  PeriodicFunction() = default;
  std::vector<double> values_;
  std::function<double(double)> evaluator_;
};

// Real Fourier modes of the grid samples: f ~ a0 + sum a_n cos(n theta)
// + b_n sin(n theta), n = 1..M/2-1 (the Nyquist bin is dropped).
struct FourierModes {
  double a0 = 0.0;
  std::vector<double> cosine;  // index n-1 holds a_n
  std::vector<double> sine;    // index n-1 holds b_n
};

FourierModes analyze_modes(const PeriodicFunction& f);

// Grid samples of a0 + sum a_n cos + b_n sin on the size-m offset grid.
PeriodicFunction synthesize_modes(const FourierModes& modes, std::size_t m);

// Conjugate-function operator, mode-wise: cos(n.) -> sin(n.),
// sin(n.) -> -cos(n.), constants -> 0.
PeriodicFunction hilbert_spectral(const PeriodicFunction& f);

struct PvOptions {
  double eta_min = 1e-9;  // guard band; nodes with t < eta_min are dropped
  double tol = 1e-6;
  // Quadrature nodes per unit of grid size; the coarse level uses
  // node_factor*M midpoint nodes on (0, pi], the fine level twice that.
  std::size_t node_factor = 4;
};

// Principal-value transform at a single point by symmetric-pair midpoint
// quadrature of [f(x-t) - f(x+t)] cot(t/2) / (2 pi), Richardson-extrapolated
// over two node counts. `disagreement`, when given, receives the
// two-resolution difference so callers can detect unresolved singularities.
double hilbert_pv_at(const PeriodicFunction& f, double x,
                     const PvOptions& opts = {},
                     double* disagreement = nullptr);

// Full-grid principal-value transform. Throws SingularityUnresolved when the
// two resolutions disagree by more than 10x tolerance at some grid point
// (which happens exactly at jump points of f).
PeriodicFunction hilbert_pv(const PeriodicFunction& f,
                            const PvOptions& opts = {});

// ((1/2pi) Int |f|^p dtheta)^(1/p) by the midpoint rule.
double lp_norm(const PeriodicFunction& f, double p);

}  // namespace skembed

#endif  // SKEMBED_HILBERT_HPP
