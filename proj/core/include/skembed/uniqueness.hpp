#ifndef SKEMBED_UNIQUENESS_HPP
#define SKEMBED_UNIQUENESS_HPP

#include <string>

#include "skembed/geometry.hpp"
#include "skembed/simulate.hpp"
#include "skembed/stats.hpp"

namespace skembed {

struct MomentEvidence {
  double p = 0.0;
  std::string verdict;  // finite | infinite-suspected | inconclusive
  double hill_index = 0.0;
  double hill_se = 0.0;
  bool power_tail_detected = false;
  BootstrapCI tau_p_half_ci;
  double censored_fraction = 0.0;
  std::size_t n_paths = 0;
};

struct UniquenessReport {
  bool symmetric = false;
  bool delta_convex = false;
  bool simple = false;
  MomentEvidence moment;
};

struct CheckOptions {
  std::size_t n_paths = 20000;
  double dt = 2e-3;
  std::uint64_t seed = 7;
  std::uint64_t max_steps = 1'000'000;
  double geometry_tol = 1e-8;
  std::complex<double> start{0.0, 0.0};
};

// Evaluates the three uniqueness conditions on a candidate domain: symmetry
// and vertical convexity by geometry, moment finiteness by sampled-exit-time
// evidence (never a proof; the verdict is graded by a Hill-index interval
// against p/2).
UniquenessReport check_conditions(const BoundaryCurve& curve, double p,
                                  const CheckOptions& opts = {});

// Symmetric Hausdorff distance between two boundary polylines. Throws
// WindowMismatch when exactly one side is clipped or the windows differ.
double compare_domains(const BoundaryCurve& a, const BoundaryCurve& b);

}  // namespace skembed

#endif  // SKEMBED_UNIQUENESS_HPP
