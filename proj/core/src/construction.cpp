#include "skembed/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "skembed/errors.hpp"
#include "skembed/fft.hpp"
#include "skembed/geometry.hpp"
#include "skembed/hilbert.hpp"
#include "skembed/io.hpp"

namespace skembed {

namespace {

constexpr double kClampMagnitude = 1e12;
constexpr double kMeanTol = 1e-8;
constexpr double kSineTol = 1e-10;

}  // namespace

FourierProfile build_profile(const QuantileFn& g, std::size_t m) {
  if (m < 1024 || !detail::is_power_of_two(m)) {
    fail(ErrorCode::InvalidArgument,
         "profile grid must be a power of two >= 2^10");
  }
  FourierProfile profile;
  profile.grid_size = m;
  profile.support_unbounded = g.unbounded();
  profile.theta.resize(m);
  profile.phi.resize(m);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (std::size_t j = 0; j < m; ++j) {
    // Half-offset grid: theta = 0 and +-pi fall between samples, so G is
    // never evaluated at u = 0 or 1 even for unbounded supports.
    const double theta = -std::numbers::pi + (static_cast<double>(j) + 0.5) * h;
    profile.theta[j] = theta;
    const double u = std::abs(theta) / std::numbers::pi;
    double v = g(u);
    if (!std::isfinite(v) || std::abs(v) > kClampMagnitude) {
      if (!g.unbounded()) {
        fail(ErrorCode::UnboundedValue,
             "quantile overflow for a bounded-support measure");
      }
      v = std::clamp(v, -kClampMagnitude, kClampMagnitude);
      profile.clamped = true;
    }
    profile.phi[j] = v;
  }
  return profile;
}

void cosine_coefficients(FourierProfile& profile, std::size_t n_coeffs) {
  if (n_coeffs == 0 || profile.grid_size < 2 * n_coeffs) {
    fail(ErrorCode::InvalidArgument,
         "cosine_coefficients requires M >= 2N and N >= 1");
  }
  const PeriodicFunction f = PeriodicFunction::from_samples(profile.phi);
  const FourierModes modes = analyze_modes(f);
  if (std::abs(modes.a0) >= kMeanTol) {
    fail(ErrorCode::MeanNotZero,
         "profile mean mode exceeds tolerance; the measure was not centered");
  }
  double max_sine = 0.0;
  for (double b : modes.sine) max_sine = std::max(max_sine, std::abs(b));
  if (max_sine >= kSineTol) {
    fail(ErrorCode::InvalidArgument,
         "profile has nonvanishing sine modes; it must be even in theta");
  }
  profile.a0 = modes.a0;
  profile.a.assign(modes.cosine.begin(),
                   modes.cosine.begin() + static_cast<long>(n_coeffs));
}

std::vector<double> conjugate_series(const std::vector<double>& a,
                                     std::size_t m) {
  if (a.empty() || m < 2 * a.size()) {
    fail(ErrorCode::InvalidArgument, "conjugate_series requires M >= 2N");
  }
  FourierModes modes;
  modes.a0 = 0.0;
  modes.cosine.assign(a.size(), 0.0);
  modes.sine = a;
  return synthesize_modes(modes, m).values();
}

DomainArtifact synthesize(const MeasureSpec& spec, std::size_t n_coeffs,
                          std::size_t m) {
  const MeasureSpec centered = center(spec);
  if (std::abs(centered.mean()) > 1e-10) {
    fail(ErrorCode::MeanNotZero, "centering failed to zero the mean");
  }
  const QuantileFn g = quantile(centered);
  FourierProfile profile = build_profile(g, m);
  cosine_coefficients(profile, n_coeffs);

  DomainArtifact artifact;
  artifact.n_coeffs = n_coeffs;
  artifact.grid_size = m;
  artifact.a = profile.a;
  artifact.theta = profile.theta;
  artifact.x = profile.phi;  // Re boundary = phi, exact
  artifact.y = conjugate_series(profile.a, m);
  artifact.p_target = centered.p_target();
  artifact.support_unbounded = profile.support_unbounded;
  artifact.measure_json = centered.to_json_text();
  artifact.measure_hash = fnv1a64_hex(artifact.measure_json);

  double sum_sq = 0.0;
  for (double an : artifact.a) sum_sq += an * an;
  artifact.diagnostics.parseval_etau = 0.5 * sum_sq;

  const double p = artifact.p_target;
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double mod2 =
        artifact.x[j] * artifact.x[j] + artifact.y[j] * artifact.y[j];
    acc += std::pow(mod2, 0.5 * p);
  }
  artifact.diagnostics.hardy_p_norm_estimate =
      std::pow(acc / static_cast<double>(m), 1.0 / p);

  const BoundaryCurve curve = curve_from_artifact(artifact);
  artifact.diagnostics.symmetry_ok = is_symmetric(curve, 1e-8);
  artifact.diagnostics.delta_convex_ok =
      artifact.diagnostics.symmetry_ok ? is_delta_convex(curve, 1e-9) : false;
  artifact.diagnostics.simple_ok = is_simple(curve);
  return artifact;
}

MapValue evaluate_map(const DomainArtifact& artifact, std::complex<double> z) {
  if (std::abs(z) > 1.0 - 1e-9) {
    fail(ErrorCode::OutsideDisk,
         "evaluate_map requires |z| <= 1 - 1e-9; the truncated series is not "
         "meaningful that close to the circle");
  }
  const auto& a = artifact.a;
  std::complex<double> p(0.0, 0.0);
  for (std::size_t n = a.size(); n >= 1; --n) {
    p = p * z + a[n - 1];
  }
  MapValue out;
  out.value = p * z;

  // Tail estimate from a power-law envelope fitted to block maxima of |a_n|.
  const std::size_t n = a.size();
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = n / 4; i < n / 2; ++i) m1 = std::max(m1, std::abs(a[i]));
  for (std::size_t i = n / 2; i < n; ++i) m2 = std::max(m2, std::abs(a[i]));
  const double r = std::abs(z);
  if (m2 > 0.0 && r > 0.0) {
    const double alpha = m1 > 0.0 ? std::max(0.0, std::log2(m1 / m2)) : 0.0;
    const double nn = static_cast<double>(n);
    const double c = m2 * std::pow(nn, alpha);
    out.tail_bound = c * std::pow(nn + 1.0, -alpha) * std::pow(r, nn + 1.0) /
                     (1.0 - r);
  }
  return out;
}

std::vector<double> fejer_smoothed_conjugate(const DomainArtifact& artifact) {
  std::vector<double> weighted = artifact.a;
  const double np1 = static_cast<double>(weighted.size() + 1);
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    weighted[i] *= 1.0 - static_cast<double>(i + 1) / np1;
  }
  return conjugate_series(weighted, artifact.grid_size);
}

}  // namespace skembed
