#include "skembed/uniqueness.hpp"

#include <algorithm>
#include <cmath>

#include "skembed/errors.hpp"

namespace skembed {

UniquenessReport check_conditions(const BoundaryCurve& curve, double p,
                                  const CheckOptions& opts) {
  if (!is_simple(curve)) {
    fail(ErrorCode::InvalidArgument,
         "uniqueness check requires a simple boundary curve");
  }
  UniquenessReport rep;
  rep.simple = true;
  rep.symmetric = is_symmetric(curve, opts.geometry_tol);
  rep.delta_convex = rep.symmetric
                         ? is_delta_convex(curve, opts.geometry_tol)
                         : false;

  EulerOptions eo;
  eo.dt = opts.dt;
  eo.n_paths = opts.n_paths;
  eo.seed = opts.seed;
  eo.max_steps = opts.max_steps;
  const ExitSampleSet samples = euler_exit(curve, opts.start, eo);

  MomentEvidence& ev = rep.moment;
  ev.p = p;
  ev.n_paths = opts.n_paths;
  ev.censored_fraction =
      static_cast<double>(samples.budget_exceeded) /
      static_cast<double>(opts.n_paths);

  std::vector<double> taus = samples.exit_times();
  taus.insert(taus.end(), samples.censored_times.begin(),
              samples.censored_times.end());
  const double q = 0.5 * p;
  ev.tau_p_half_ci = bootstrap_mean_ci(
      taus, [q](double t) { return std::pow(t, q); }, 1000, opts.seed ^ 0x5a);

  const std::size_t k =
      std::clamp<std::size_t>(taus.size() / 10, 50, 500);
  double alpha = 0.0;
  bool have_hill = false;
  try {
    alpha = hill_tail_index(taus, k);
    have_hill = true;
  } catch (const Error&) {
    have_hill = false;
  }
  if (have_hill) {
    ev.hill_index = alpha;
    ev.hill_se = alpha / std::sqrt(static_cast<double>(k));
    ev.power_tail_detected = alpha < 10.0;
    const double lo_ci = alpha - 2.0 * ev.hill_se;
    const double hi_ci = alpha + 2.0 * ev.hill_se;
    if (!ev.power_tail_detected && ev.censored_fraction < 1e-3) {
      ev.verdict = "finite";
    } else if (lo_ci > q) {
      ev.verdict = "finite";
    } else if (hi_ci < q) {
      ev.verdict = "infinite-suspected";
    } else {
      ev.verdict = "inconclusive";
    }
  } else {
    ev.verdict = "inconclusive";
  }
  return rep;
}

double compare_domains(const BoundaryCurve& a, const BoundaryCurve& b) {
  if (a.window.has_value() != b.window.has_value() ||
      (a.window && !(*a.window == *b.window))) {
    fail(ErrorCode::WindowMismatch,
         "domains must be unclipped or share an identical clip window");
  }
  return hausdorff_distance(a.pts, b.pts);
}

}  // namespace skembed
