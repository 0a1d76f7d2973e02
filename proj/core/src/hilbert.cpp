#include "skembed/hilbert.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "skembed/errors.hpp"
#include "skembed/fft.hpp"

namespace skembed {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_grid_size(std::size_t m) {
  if (m < 8 || !detail::is_power_of_two(m)) {
    fail(ErrorCode::InvalidArgument,
         "periodic grid size must be a power of two >= 8");
  }
}

double grid_theta(std::size_t j, std::size_t m) {
  return -std::numbers::pi +
         (static_cast<double>(j) + 0.5) * kTwoPi / static_cast<double>(m);
}

// Twist factor exp(-i n (h/2 - pi)) relating the offset-grid DFT to
// coefficients of exp(i n theta).
std::complex<double> twist(std::size_t n, std::size_t m) {
  const double h = kTwoPi / static_cast<double>(m);
  const double ang = static_cast<double>(n) * (0.5 * h - std::numbers::pi);
  return std::polar(1.0, -ang);
}

}  // namespace

PeriodicFunction PeriodicFunction::from_samples(std::vector<double> values) {
  check_grid_size(values.size());
  for (double v : values) {
    if (!std::isfinite(v)) {
      fail(ErrorCode::InvalidArgument, "periodic samples must be finite");
    }
  }
  PeriodicFunction f;
  f.values_ = std::move(values);
  return f;
}

PeriodicFunction PeriodicFunction::from_function(
    std::function<double(double)> fn, std::size_t m) {
  check_grid_size(m);
  PeriodicFunction f;
  f.values_.resize(m);
  for (std::size_t j = 0; j < m; ++j) f.values_[j] = fn(grid_theta(j, m));
  for (double v : f.values_) {
    if (!std::isfinite(v)) {
      fail(ErrorCode::InvalidArgument, "periodic samples must be finite");
    }
  }
  f.evaluator_ = std::move(fn);
  return f;
}

double PeriodicFunction::theta(std::size_t j) const {
  return grid_theta(j, values_.size());
}

double PeriodicFunction::evaluate(double x) const {
  if (evaluator_) {
    // Reduce to [-pi, pi) so closed-form evaluators built on that interval
    // see their principal range.
    double r = std::remainder(x, kTwoPi);
    if (r >= std::numbers::pi) r -= kTwoPi;
    if (r < -std::numbers::pi) r += kTwoPi;
    return evaluator_(r);
  }
  const std::size_t m = values_.size();
  const double h = kTwoPi / static_cast<double>(m);
  // Offset grid: sample j sits at -pi + (j+1/2)h.
  double s = (x + std::numbers::pi) / h - 0.5;
  double base = std::floor(s);
  const double frac = s - base;
  const auto wrap = [m](long long j) {
    long long r = j % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    return static_cast<std::size_t>(r);
  };
  const std::size_t j0 = wrap(static_cast<long long>(base));
  const std::size_t j1 = wrap(static_cast<long long>(base) + 1);
  return values_[j0] * (1.0 - frac) + values_[j1] * frac;
}

FourierModes analyze_modes(const PeriodicFunction& f) {
  const std::size_t m = f.size();
  auto spectrum = detail::fft_real_forward(f.values());
  FourierModes modes;
  modes.a0 = spectrum[0].real() / static_cast<double>(m);
  const std::size_t nmax = m / 2 - 1;
  modes.cosine.resize(nmax);
  modes.sine.resize(nmax);
  for (std::size_t n = 1; n <= nmax; ++n) {
    const std::complex<double> c =
        spectrum[n] / static_cast<double>(m) * twist(n, m);
    modes.cosine[n - 1] = 2.0 * c.real();
    modes.sine[n - 1] = -2.0 * c.imag();
  }
  return modes;
}

PeriodicFunction synthesize_modes(const FourierModes& modes, std::size_t m) {
  check_grid_size(m);
  if (modes.cosine.size() != modes.sine.size()) {
    fail(ErrorCode::InvalidArgument, "mode arrays must have equal length");
  }
  if (modes.cosine.size() > m / 2 - 1) {
    fail(ErrorCode::InvalidArgument,
         "grid too small for the requested mode count");
  }
  std::vector<std::complex<double>> bins(m, {0.0, 0.0});
  bins[0] = modes.a0;
  for (std::size_t n = 1; n <= modes.cosine.size(); ++n) {
    // c_n for exp(i n theta); conjugate bin mirrors it.
    const std::complex<double> c(0.5 * modes.cosine[n - 1],
                                 -0.5 * modes.sine[n - 1]);
    const std::complex<double> binval = c / twist(n, m);
    bins[n] = binval;
    bins[m - n] = std::conj(binval);
  }
  detail::fft_radix2(bins, +1);
  std::vector<double> values(m);
  for (std::size_t j = 0; j < m; ++j) values[j] = bins[j].real();
  return PeriodicFunction::from_samples(std::move(values));
}

PeriodicFunction hilbert_spectral(const PeriodicFunction& f) {
  FourierModes modes = analyze_modes(f);
  modes.a0 = 0.0;
  for (std::size_t i = 0; i < modes.cosine.size(); ++i) {
    const double a = modes.cosine[i];
    const double b = modes.sine[i];
    modes.cosine[i] = -b;
    modes.sine[i] = a;
  }
  return synthesize_modes(modes, f.size());
}

namespace {

double pv_midpoint(const PeriodicFunction& f, double x, std::size_t nodes,
                   double eta_min) {
  const double dt = std::numbers::pi / static_cast<double>(nodes);
  double acc = 0.0;
  for (std::size_t k = 0; k < nodes; ++k) {
    const double t = (static_cast<double>(k) + 0.5) * dt;
    if (t < eta_min) continue;
    const double pair = f.evaluate(x - t) - f.evaluate(x + t);
    acc += pair / std::tan(0.5 * t);
  }
  return acc * dt / kTwoPi;
}

}  // namespace

double hilbert_pv_at(const PeriodicFunction& f, double x,
                     const PvOptions& opts, double* disagreement) {
  if (!(opts.eta_min > 0.0 && opts.eta_min <= std::numbers::pi / 8.0)) {
    fail(ErrorCode::InvalidArgument, "eta_min must lie in (0, pi/8]");
  }
  const std::size_t coarse = opts.node_factor * f.size();
  const double i1 = pv_midpoint(f, x, coarse, opts.eta_min);
  const double i2 = pv_midpoint(f, x, 2 * coarse, opts.eta_min);
  if (disagreement != nullptr) *disagreement = std::abs(i2 - i1);
  return (4.0 * i2 - i1) / 3.0;
}

PeriodicFunction hilbert_pv(const PeriodicFunction& f, const PvOptions& opts) {
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    double gap = 0.0;
    out[j] = hilbert_pv_at(f, f.theta(j), opts, &gap);
    if (gap > 10.0 * opts.tol) {
      fail(ErrorCode::SingularityUnresolved,
           "principal-value quadrature did not converge; the input likely "
           "jumps at the evaluation point");
    }
  }
  return PeriodicFunction::from_samples(std::move(out));
}

double lp_norm(const PeriodicFunction& f, double p) {
  if (!(p >= 1.0)) fail(ErrorCode::InvalidArgument, "lp_norm needs p >= 1");
  double acc = 0.0;
  for (double v : f.values()) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

}  // namespace skembed
