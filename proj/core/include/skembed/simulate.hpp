#ifndef SKEMBED_SIMULATE_HPP
#define SKEMBED_SIMULATE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skembed/construction.hpp"
#include "skembed/geometry.hpp"
#include "skembed/measure.hpp"
#include "skembed/stats.hpp"

namespace skembed {

class PolygonIndex;

enum class Backend { Euler, Wos };

const char* backend_name(Backend b);

struct ExitRecord {
  std::uint32_t stream_id = 0;
  double exit_x = 0.0;
  double exit_y = 0.0;
  double exit_time = 0.0;
  std::uint64_t n_steps = 0;
  bool through_frame = false;  // exited via an artificial (clip) edge
};

struct ExitSampleSet {
  Backend backend = Backend::Euler;
  std::uint64_t seed = 0;
  double dt = 0.0;        // Euler step variance per coordinate
  double eps = 0.0;       // WoS absorption distance
  bool mean_time_only = false;  // WoS: time field estimates E[tau] only
  double delta_report = 0.0;    // max exit-point distance to the boundary
  std::vector<ExitRecord> records;
  std::uint64_t budget_exceeded = 0;      // paths that never exited
  std::vector<double> censored_times;     // elapsed time of those paths

  std::vector<double> exit_times() const;
  std::vector<double> exit_re() const;
  double leakage_fraction() const;
};

struct EulerOptions {
  double dt = 1e-3;
  std::size_t n_paths = 10000;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 2'000'000;
  // Brownian-bridge crossing test between steps; removes the O(sqrt(dt))
  // late-detection bias at the cost of a distance query per step.
  bool bridge_correction = false;
};

// Gaussian-increment walk killed at the first boundary crossing. The exit
// point is the linear interpolate of the crossing step onto the boundary and
// the exit time carries the fractional step credit. Per-path streams are
// keyed by (seed, path index).
ExitSampleSet euler_exit(const BoundaryCurve& curve, std::complex<double> start,
                         const EulerOptions& opts);

struct WosOptions {
  double eps = 1e-6;
  std::size_t n_paths = 10000;
  std::uint64_t seed = 1;
  std::uint64_t max_jumps = 100000;
};

// Walk-on-spheres exit-position sampler. The time field accumulates the
// per-sphere mean exit times R_i^2/2 and therefore estimates E[tau] only,
// never the law of tau (flagged mean_time_only).
ExitSampleSet wos_exit(const BoundaryCurve& curve, std::complex<double> start,
                       const WosOptions& opts);

struct VerifyOptions {
  Backend backend = Backend::Euler;
  std::size_t n_paths = 100000;
  double dt = 1e-3;
  double eps = 1e-6;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 2'000'000;
  bool bridge_correction = false;
  std::optional<ClipWindow> clip;  // required for unbounded artifacts
};

struct VerifyReport {
  std::string backend;
  std::size_t n_paths = 0;
  double ks_distance = 0.0;
  double ks_threshold_99 = 0.0;
  bool ks_pass = false;
  double mean_exit_time = 0.0;
  double mean_exit_time_se = 0.0;
  double parseval_etau = 0.0;
  bool mean_time_within_3se = false;
  double p_target = 0.0;
  BootstrapCI tau_p_half_moment;  // E[tau^(p/2)] with bootstrap CI
  double leakage_fraction = 0.0;
  bool leakage_ok = true;  // > 0.5% fails the run loudly
  std::uint64_t budget_exceeded = 0;
  double delta_report = 0.0;
  bool markov_ok = false;
  double hill_index = 0.0;          // 0 when not computed
  bool power_tail_detected = false;
};

// Simulates exits from the synthesized domain and compares the law of
// Re(exit) against the centered target measure, the mean exit time against
// the coefficient identity, and estimates E[tau^(p/2)].
VerifyReport verify_embedding(const DomainArtifact& artifact,
                              const MeasureSpec& spec,
                              const VerifyOptions& opts);

// Hill tail-index of the exit times; an estimate of the moment cutoff
// exponent. Euler samples only (WoS times are conditional means).
double tail_index(const ExitSampleSet& samples, std::size_t k);

}  // namespace skembed

#endif  // SKEMBED_SIMULATE_HPP
