#ifndef SKEMBED_MEASURE_HPP
#define SKEMBED_MEASURE_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skembed {

// Target distributions are either a named analytic family, finitely many
// atoms, or a tabulated CDF interpolated piecewise-linearly.
enum class MeasureKind { Builtin, Discrete, TabulatedCdf };

enum class BuiltinFamily { Uniform, Gaussian, Laplace, TwoPoint, Arcsine };

struct Atom {
  double x = 0.0;
  double weight = 0.0;
};

class MeasureSpec {
 public:
  static MeasureSpec builtin(const std::string& name,
                             const std::map<std::string, double>& params,
                             double p_target);
  static MeasureSpec discrete(std::vector<Atom> atoms, double p_target);
  static MeasureSpec tabulated(std::vector<std::pair<double, double>> knots,
                               double p_target);

  static MeasureSpec from_json_text(const std::string& text);
  std::string to_json_text() const;

  MeasureKind kind() const { return kind_; }
  BuiltinFamily family() const { return family_; }
  double param(const std::string& name) const;
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }
  double p_target() const { return p_target_; }

  // Total centering shift applied so far (original minus current mean).
  double centering_shift() const { return centering_shift_; }

  double mean() const;
  double cdf(double x) const;

  // True when the quantile diverges at u -> 0 or 1.
  bool support_unbounded() const;

  std::string describe() const;

 private:
  MeasureSpec() = default;
  void validate() const;

  MeasureKind kind_ = MeasureKind::Builtin;
  BuiltinFamily family_ = BuiltinFamily::Uniform;
  std::map<std::string, double> params_;
  std::vector<Atom> atoms_;
  std::vector<std::pair<double, double>> knots_;
  double p_target_ = 2.0;
  double centering_shift_ = 0.0;

  friend MeasureSpec center(const MeasureSpec&);
};

struct QuantileFn {
  std::function<double(double)> eval;  // defined on (0, 1)
  bool continuous = true;              // false when the CDF has flat runs
  double support_lo = 0.0;             // may be -inf
  double support_hi = 0.0;             // may be +inf

  double operator()(double u) const { return eval(u); }
  bool unbounded() const;
};

// Shift the measure so its mean is zero; the shift is recorded on the spec.
MeasureSpec center(const MeasureSpec& spec);

// Left-continuous generalized inverse of the CDF.
QuantileFn quantile(const MeasureSpec& spec);

// E|X|^q. Analytic for builtins, exact for atoms, adaptive quadrature for
// tabulated CDFs.
double moment(const MeasureSpec& spec, double q);

// Standard normal quantile, |error| < 1e-9 before the final Newton
// refinement on the CDF.
double normal_quantile(double u);

}  // namespace skembed

#endif  // SKEMBED_MEASURE_HPP
