#ifndef SKEMBED_CONSTRUCTION_HPP
#define SKEMBED_CONSTRUCTION_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "skembed/measure.hpp"

namespace skembed {

// Boundary profile phi(theta_j) = G(|theta_j|/pi) together with its cosine
// coefficients a_1..a_N, so that phi ~ sum a_n cos(n theta). The grid is the
// half-offset grid of hilbert.hpp, which keeps unbounded quantiles finite at
// every sampled point.
struct FourierProfile {
  std::size_t grid_size = 0;      // M
  std::vector<double> theta;      // theta_j
  std::vector<double> phi;        // phi(theta_j)
  std::vector<double> a;          // a_1..a_N
  double a0 = 0.0;                // computed mean mode, asserted ~0
  bool support_unbounded = false;
  bool clamped = false;           // some sample overflowed and was clamped
};

struct Diagnostics {
  double parseval_etau = 0.0;          // (1/2) sum a_n^2
  double hardy_p_norm_estimate = 0.0;  // boundary L^p norm of the map
  bool symmetry_ok = false;
  bool delta_convex_ok = false;
  bool simple_ok = false;  // false = self-intersection suspected
};

struct DomainArtifact {
  std::size_t n_coeffs = 0;  // N
  std::size_t grid_size = 0;  // M
  std::vector<double> a;
  std::vector<double> theta;
  std::vector<double> x;  // Re boundary = phi, exact by construction
  std::vector<double> y;  // Im boundary = truncated conjugate series
  double p_target = 2.0;
  bool support_unbounded = false;
  Diagnostics diagnostics;
  std::string measure_hash;  // FNV-1a of the centered measure JSON
  std::string measure_json;  // centered measure, for verification runs
};

// Samples phi on the size-M offset grid. M must be a power of two >= 2^10.
// Infinite quantile values cannot occur on the offset grid; values beyond
// 1e12 in magnitude are clamped and flagged.
FourierProfile build_profile(const QuantileFn& g, std::size_t m);

// Cosine coefficients a_n = (1/pi) Int phi cos(n theta) dtheta via the fast
// transform, truncated to n <= n_coeffs. Requires m >= 2*n_coeffs. Throws
// MeanNotZero if |a_0| >= 1e-8 and rejects profiles whose computed sine
// coefficients exceed 1e-10 (the profile must be even).
void cosine_coefficients(FourierProfile& profile, std::size_t n_coeffs);

// Conjugate sine series sum a_n sin(n theta_j) on the size-m offset grid.
std::vector<double> conjugate_series(const std::vector<double>& a,
                                     std::size_t m);

// Full pipeline: center, invert, sample, transform, conjugate, and attach
// diagnostics. The boundary's real parts are the raw profile values.
DomainArtifact synthesize(const MeasureSpec& spec, std::size_t n_coeffs,
                          std::size_t m);

struct MapValue {
  std::complex<double> value;
  double tail_bound = 0.0;  // envelope estimate of |sum_{n>N} a_n z^n|
};

// Truncated power series sum a_n z^n evaluated in Horner order. Throws
// OutsideDisk for |z| > 1 - 1e-9.
MapValue evaluate_map(const DomainArtifact& artifact, std::complex<double> z);

// Boundary resampled with Fejer (Cesaro) weights on the sine series. For
// plotting only: smoothing redistributes the boundary measure.
std::vector<double> fejer_smoothed_conjugate(const DomainArtifact& artifact);

}  // namespace skembed

#endif  // SKEMBED_CONSTRUCTION_HPP
