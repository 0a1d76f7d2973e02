#include "skembed/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "skembed/errors.hpp"
#include "skembed/polygon_index.hpp"
#include "skembed/rng.hpp"

namespace skembed {

const char* backend_name(Backend b) {
  return b == Backend::Euler ? "euler" : "wos";
}

std::vector<double> ExitSampleSet::exit_times() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.exit_time);
  return out;
}

std::vector<double> ExitSampleSet::exit_re() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.exit_x);
  return out;
}

double ExitSampleSet::leakage_fraction() const {
  if (records.empty()) return 0.0;
  std::size_t leaked = 0;
  for (const auto& r : records) {
    if (r.through_frame) ++leaked;
  }
  return static_cast<double>(leaked) / static_cast<double>(records.size());
}

ExitSampleSet euler_exit(const BoundaryCurve& curve, std::complex<double> start,
                         const EulerOptions& opts) {
  if (!(opts.dt > 0.0 && opts.dt <= 1e-2)) {
    fail(ErrorCode::InvalidArgument, "euler dt must lie in (0, 1e-2]");
  }
  const PolygonIndex index(curve);
  if (!index.contains(start.real(), start.imag())) {
    fail(ErrorCode::InvalidArgument, "start point is not inside the domain");
  }
  ExitSampleSet out;
  out.backend = Backend::Euler;
  out.seed = opts.seed;
  out.dt = opts.dt;
  out.records.reserve(opts.n_paths);

  const double sdt = std::sqrt(opts.dt);
  const double bridge_cap = 6.0 * sdt;  // p < exp(-72): negligible beyond
  for (std::size_t path = 0; path < opts.n_paths; ++path) {
    auto eng = path_engine(opts.seed, path);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double x = start.real(), y = start.imag();
    double d_here = opts.bridge_correction
                        ? index.distance_capped(x, y, bridge_cap)
                        : 0.0;
    std::uint64_t step = 0;
    bool exited = false;
    while (step < opts.max_steps) {
      ++step;
      const double nx = x + sdt * gauss(eng);
      const double ny = y + sdt * gauss(eng);
      if (!index.contains(nx, ny)) {
        const auto hit = index.first_crossing(x, y, nx, ny);
        ExitRecord rec;
        rec.stream_id = static_cast<std::uint32_t>(path);
        if (hit) {
          rec.exit_x = hit->x;
          rec.exit_y = hit->y;
          rec.exit_time =
              (static_cast<double>(step) - 1.0 + hit->t) * opts.dt;
          rec.through_frame = curve.edge_artificial(hit->edge);
        } else {
          // Parity says outside but no crossing resolved; project back.
          const auto p = index.nearest_point(nx, ny);
          rec.exit_x = p[0];
          rec.exit_y = p[1];
          rec.exit_time = static_cast<double>(step) * opts.dt;
        }
        rec.n_steps = step;
        out.records.push_back(rec);
        exited = true;
        break;
      }
      if (opts.bridge_correction) {
        const double d_next = index.distance_capped(nx, ny, bridge_cap);
        const double prod = d_here * d_next;
        if (prod < 10.0 * opts.dt) {
          const double p_cross = std::exp(-2.0 * prod / opts.dt);
          if (unif(eng) < p_cross) {
            // The bridge touched the boundary between the two interior
            // endpoints; place the exit at the nearest boundary point of the
            // distance-weighted interpolate.
            const double frac =
                d_here + d_next > 0.0 ? d_here / (d_here + d_next) : 0.5;
            const double mx = x + frac * (nx - x);
            const double my = y + frac * (ny - y);
            const auto p = index.nearest_point(mx, my);
            ExitRecord rec;
            rec.stream_id = static_cast<std::uint32_t>(path);
            rec.exit_x = p[0];
            rec.exit_y = p[1];
            rec.exit_time =
                (static_cast<double>(step) - 1.0 + frac) * opts.dt;
            rec.n_steps = step;
            out.records.push_back(rec);
            exited = true;
            break;
          }
        }
        d_here = d_next;
      }
      x = nx;
      y = ny;
    }
    if (!exited) {
      ++out.budget_exceeded;
      out.censored_times.push_back(static_cast<double>(opts.max_steps) *
                                   opts.dt);
    }
  }
  double delta = 0.0;
  for (const auto& r : out.records) {
    delta = std::max(delta, index.distance(r.exit_x, r.exit_y));
  }
  out.delta_report = delta;
  return out;
}

ExitSampleSet wos_exit(const BoundaryCurve& curve, std::complex<double> start,
                       const WosOptions& opts) {
  if (!(opts.eps > 0.0)) {
    fail(ErrorCode::InvalidArgument, "wos eps must be positive");
  }
  const PolygonIndex index(curve);
  if (!index.contains(start.real(), start.imag())) {
    fail(ErrorCode::InvalidArgument, "start point is not inside the domain");
  }
  ExitSampleSet out;
  out.backend = Backend::Wos;
  out.seed = opts.seed;
  out.eps = opts.eps;
  out.mean_time_only = true;
  out.records.reserve(opts.n_paths);

  for (std::size_t path = 0; path < opts.n_paths; ++path) {
    auto eng = path_engine(opts.seed, path);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double x = start.real(), y = start.imag();
    double time_acc = 0.0;
    std::uint64_t jumps = 0;
    bool exited = false;
    while (jumps < opts.max_jumps) {
      ++jumps;
      const double d = index.distance(x, y);
      if (!std::isfinite(d)) {
        fail(ErrorCode::DistanceQueryFailure,
             "nearest-boundary distance degenerated");
      }
      if (d < opts.eps) {
        const auto p = index.nearest_point(x, y);
        ExitRecord rec;
        rec.stream_id = static_cast<std::uint32_t>(path);
        rec.exit_x = p[0];
        rec.exit_y = p[1];
        rec.exit_time = time_acc;
        rec.n_steps = jumps;
        out.records.push_back(rec);
        exited = true;
        break;
      }
      time_acc += 0.5 * d * d;  // mean exit time of the inscribed disk
      const double ang = 2.0 * std::numbers::pi * unif(eng);
      x += d * std::cos(ang);
      y += d * std::sin(ang);
    }
    if (!exited) {
      ++out.budget_exceeded;
      out.censored_times.push_back(time_acc);
    }
  }

  // Mark frame exits by nearest-edge lookup.
  if (!curve.artificial_edge.empty()) {
    for (auto& r : out.records) {
      r.through_frame =
          curve.edge_artificial(index.nearest_edge(r.exit_x, r.exit_y));
    }
  }
  double delta = 0.0;
  for (const auto& r : out.records) {
    delta = std::max(delta, index.distance(r.exit_x, r.exit_y));
  }
  out.delta_report = delta;
  return out;
}

double tail_index(const ExitSampleSet& samples, std::size_t k) {
  if (samples.backend != Backend::Euler) {
    fail(ErrorCode::InvalidArgument,
         "tail_index needs euler samples; wos times estimate the mean only");
  }
  std::vector<double> taus = samples.exit_times();
  taus.insert(taus.end(), samples.censored_times.begin(),
              samples.censored_times.end());
  return hill_tail_index(std::move(taus), k);
}

VerifyReport verify_embedding(const DomainArtifact& artifact,
                              const MeasureSpec& spec,
                              const VerifyOptions& opts) {
  BoundaryCurve curve = curve_from_artifact(artifact);
  if (artifact.support_unbounded) {
    if (!opts.clip) {
      fail(ErrorCode::WindowMismatch,
           "unbounded artifact requires a clip window for verification");
    }
    curve = clip_to_window(curve, *opts.clip);
  }

  ExitSampleSet samples;
  if (opts.backend == Backend::Euler) {
    EulerOptions eo;
    eo.dt = opts.dt;
    eo.n_paths = opts.n_paths;
    eo.seed = opts.seed;
    eo.max_steps = opts.max_steps;
    eo.bridge_correction = opts.bridge_correction;
    samples = euler_exit(curve, {0.0, 0.0}, eo);
  } else {
    WosOptions wo;
    wo.eps = opts.eps;
    wo.n_paths = opts.n_paths;
    wo.seed = opts.seed;
    samples = wos_exit(curve, {0.0, 0.0}, wo);
  }

  const MeasureSpec centered = center(spec);
  VerifyReport rep;
  rep.backend = backend_name(opts.backend);
  rep.n_paths = opts.n_paths;
  rep.parseval_etau = artifact.diagnostics.parseval_etau;
  rep.p_target = artifact.p_target;
  rep.budget_exceeded = samples.budget_exceeded;
  rep.delta_report = samples.delta_report;
  rep.leakage_fraction = samples.leakage_fraction();
  rep.leakage_ok = rep.leakage_fraction <= 0.005;

  const std::vector<double> re = samples.exit_re();
  rep.ks_distance =
      ks_statistic(re, [&](double x) { return centered.cdf(x); });
  rep.ks_threshold_99 = ks_critical_value(0.01, re.size());
  rep.ks_pass = rep.ks_distance < rep.ks_threshold_99;

  const std::vector<double> taus = samples.exit_times();
  const MeanStderr ms = mean_stderr(taus);
  rep.mean_exit_time = ms.mean;
  rep.mean_exit_time_se = ms.stderr_;
  rep.mean_time_within_3se =
      std::abs(ms.mean - rep.parseval_etau) <= 3.0 * ms.stderr_;

  const double q = 0.5 * artifact.p_target;
  rep.tau_p_half_moment = bootstrap_mean_ci(
      taus, [q](double t) { return std::pow(t, q); }, 1000, opts.seed ^ 0x9e);

  // Markov bound on a probe grid of empirical quantiles.
  rep.markov_ok = true;
  if (!taus.empty()) {
    std::vector<double> sorted = taus;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    const double emoment = rep.tau_p_half_moment.estimate;
    for (double frac : {0.5, 0.75, 0.9, 0.95, 0.99}) {
      const double delta =
          sorted[static_cast<std::size_t>(frac * (n - 1.0))];
      if (delta <= 0.0) continue;
      const double tail = 1.0 - frac;
      const double bound = emoment / std::pow(delta, q);
      const double slack = 3.0 * std::sqrt(tail * (1.0 - tail) / n);
      if (tail > bound + slack) rep.markov_ok = false;
    }
  }

  if (opts.backend == Backend::Euler && taus.size() >= 1000) {
    const std::size_t k = std::min<std::size_t>(500, taus.size() / 10);
    try {
      rep.hill_index = tail_index(samples, k);
      rep.power_tail_detected = rep.hill_index < 10.0;
    } catch (const Error&) {
      rep.hill_index = 0.0;
      rep.power_tail_detected = false;
    }
  }
  return rep;
}

}  // namespace skembed
