#include "skembed/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "skembed/errors.hpp"
#include "skembed/quadrature.hpp"

namespace skembed {

namespace {

constexpr double kWeightTol = 1e-12;

void check_p_target(double p) {
  if (!(p > 1.0)) {
    std::ostringstream msg;
    msg << "moment order p = " << p << " rejected: the embedding is only "
        << "established for p > 1 (the range 1/2 <= p <= 1 is open).";
    if (p < 0.5) {
      msg << " For p < 1/2 it is impossible: the exit time of any simply "
             "connected domain other than the whole plane has finite moments "
             "of every order below 1/4, so a distribution with infinite p-th "
             "moment for p < 1/2 cannot arise as an exit-position law.";
    }
    fail(ErrorCode::InvalidArgument, msg.str());
  }
}

double builtin_mean(BuiltinFamily family,
                    const std::map<std::string, double>& params) {
  switch (family) {
    case BuiltinFamily::Uniform:
      return 0.5 * (params.at("a") + params.at("b"));
    case BuiltinFamily::Gaussian:
    case BuiltinFamily::Laplace:
    case BuiltinFamily::TwoPoint:
    case BuiltinFamily::Arcsine:
      return 0.0;
  }
  return 0.0;
}

}  // namespace

MeasureSpec MeasureSpec::builtin(const std::string& name,
                                 const std::map<std::string, double>& params,
                                 double p_target) {
  MeasureSpec spec;
  spec.kind_ = MeasureKind::Builtin;
  spec.params_ = params;
  spec.p_target_ = p_target;
  if (name == "uniform") {
    spec.family_ = BuiltinFamily::Uniform;
  } else if (name == "gaussian") {
    spec.family_ = BuiltinFamily::Gaussian;
  } else if (name == "laplace") {
    spec.family_ = BuiltinFamily::Laplace;
  } else if (name == "two_point") {
    spec.family_ = BuiltinFamily::TwoPoint;
  } else if (name == "arcsine") {
    spec.family_ = BuiltinFamily::Arcsine;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown builtin measure: " + name);
  }
  spec.validate();
  return spec;
}

MeasureSpec MeasureSpec::discrete(std::vector<Atom> atoms, double p_target) {
  MeasureSpec spec;
  spec.kind_ = MeasureKind::Discrete;
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.x < b.x; });
  spec.atoms_ = std::move(atoms);
  spec.p_target_ = p_target;
  spec.validate();
  return spec;
}

MeasureSpec MeasureSpec::tabulated(
    std::vector<std::pair<double, double>> knots, double p_target) {
  MeasureSpec spec;
  spec.kind_ = MeasureKind::TabulatedCdf;
  spec.knots_ = std::move(knots);
  spec.p_target_ = p_target;
  spec.validate();
  return spec;
}

void MeasureSpec::validate() const {
  check_p_target(p_target_);
  switch (kind_) {
    case MeasureKind::Builtin: {
      const auto need = [&](const char* key) {
        if (params_.find(key) == params_.end()) {
          fail(ErrorCode::InvalidArgument,
               std::string("builtin measure missing parameter '") + key + "'");
        }
      };
      switch (family_) {
        case BuiltinFamily::Uniform:
          need("a");
          need("b");
          if (!(params_.at("a") < params_.at("b"))) {
            fail(ErrorCode::InvalidArgument, "uniform requires a < b");
          }
          break;
        case BuiltinFamily::Gaussian:
          need("sigma");
          if (!(params_.at("sigma") > 0.0)) {
            fail(ErrorCode::InvalidArgument, "gaussian requires sigma > 0");
          }
          break;
        case BuiltinFamily::Laplace:
          need("b");
          if (!(params_.at("b") > 0.0)) {
            fail(ErrorCode::InvalidArgument, "laplace requires b > 0");
          }
          break;
        case BuiltinFamily::TwoPoint:
          need("c");
          if (!(params_.at("c") > 0.0)) {
            fail(ErrorCode::InvalidArgument, "two_point requires c > 0");
          }
          break;
        case BuiltinFamily::Arcsine:
          need("r");
          if (!(params_.at("r") > 0.0)) {
            fail(ErrorCode::InvalidArgument, "arcsine requires r > 0");
          }
          break;
      }
      break;
    }
    case MeasureKind::Discrete: {
      if (atoms_.empty()) {
        fail(ErrorCode::InvalidArgument, "discrete measure needs atoms");
      }
      double total = 0.0;
      for (const Atom& a : atoms_) {
        if (!(a.weight > 0.0)) {
          fail(ErrorCode::InvalidArgument, "atom weights must be positive");
        }
        if (!std::isfinite(a.x)) {
          fail(ErrorCode::InvalidArgument, "atom positions must be finite");
        }
        total += a.weight;
      }
      if (std::abs(total - 1.0) > kWeightTol) {
        fail(ErrorCode::InvalidArgument, "atom weights must sum to 1");
      }
      break;
    }
    case MeasureKind::TabulatedCdf: {
      if (knots_.size() < 2) {
        fail(ErrorCode::InvalidArgument, "tabulated CDF needs >= 2 knots");
      }
      if (std::abs(knots_.front().second) > kWeightTol ||
          std::abs(knots_.back().second - 1.0) > kWeightTol) {
        fail(ErrorCode::InvalidArgument,
             "tabulated CDF must start at 0 and end at 1");
      }
      for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!std::isfinite(knots_[i].first)) {
          fail(ErrorCode::NonIntegrableMean,
               "tabulated CDF knots must be finite");
        }
        if (i > 0) {
          if (knots_[i].first <= knots_[i - 1].first) {
            fail(ErrorCode::InvalidArgument,
                 "tabulated CDF x-knots must be strictly increasing");
          }
          if (knots_[i].second < knots_[i - 1].second - kWeightTol) {
            fail(ErrorCode::InvalidArgument,
                 "tabulated CDF must be nondecreasing");
          }
        }
      }
      break;
    }
  }
}

double MeasureSpec::param(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) {
    fail(ErrorCode::InvalidArgument, "missing parameter: " + name);
  }
  return it->second;
}

double MeasureSpec::mean() const {
  switch (kind_) {
    case MeasureKind::Builtin:
      return builtin_mean(family_, params_);
    case MeasureKind::Discrete: {
      double m = 0.0;
      for (const Atom& a : atoms_) m += a.x * a.weight;
      return m;
    }
    case MeasureKind::TabulatedCdf: {
      // Piecewise-linear F has piecewise-constant density; the trapezoid
      // value per cell is exact.
      double m = 0.0;
      for (std::size_t i = 1; i < knots_.size(); ++i) {
        const double dF = knots_[i].second - knots_[i - 1].second;
        m += dF * 0.5 * (knots_[i].first + knots_[i - 1].first);
      }
      return m;
    }
  }
  return 0.0;
}

double MeasureSpec::cdf(double x) const {
  switch (kind_) {
    case MeasureKind::Builtin: {
      switch (family_) {
        case BuiltinFamily::Uniform: {
          const double a = params_.at("a"), b = params_.at("b");
          if (x <= a) return 0.0;
          if (x >= b) return 1.0;
          return (x - a) / (b - a);
        }
        case BuiltinFamily::Gaussian: {
          const double s = params_.at("sigma");
          return 0.5 * std::erfc(-x / (s * std::numbers::sqrt2));
        }
        case BuiltinFamily::Laplace: {
          const double b = params_.at("b");
          return x < 0.0 ? 0.5 * std::exp(x / b)
                         : 1.0 - 0.5 * std::exp(-x / b);
        }
        case BuiltinFamily::TwoPoint: {
          const double c = params_.at("c");
          if (x < -c) return 0.0;
          if (x < c) return 0.5;
          return 1.0;
        }
        case BuiltinFamily::Arcsine: {
          const double r = params_.at("r");
          if (x <= -r) return 0.0;
          if (x >= r) return 1.0;
          return 0.5 + std::asin(x / r) / std::numbers::pi;
        }
      }
      return 0.0;
    }
    case MeasureKind::Discrete: {
      double F = 0.0;
      for (const Atom& a : atoms_) {
        if (a.x <= x) F += a.weight;
      }
      return std::min(F, 1.0);
    }
    case MeasureKind::TabulatedCdf: {
      if (x <= knots_.front().first) return 0.0;
      if (x >= knots_.back().first) return 1.0;
      auto it = std::upper_bound(
          knots_.begin(), knots_.end(), x,
          [](double v, const std::pair<double, double>& k) {
            return v < k.first;
          });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double t = (x - lo.first) / (hi.first - lo.first);
      return lo.second + t * (hi.second - lo.second);
    }
  }
  return 0.0;
}

bool MeasureSpec::support_unbounded() const {
  return kind_ == MeasureKind::Builtin &&
         (family_ == BuiltinFamily::Gaussian ||
          family_ == BuiltinFamily::Laplace);
}

std::string MeasureSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case MeasureKind::Builtin: {
      switch (family_) {
        case BuiltinFamily::Uniform:
          os << "uniform(" << params_.at("a") << "," << params_.at("b") << ")";
          break;
        case BuiltinFamily::Gaussian:
          os << "gaussian(sigma=" << params_.at("sigma") << ")";
          break;
        case BuiltinFamily::Laplace:
          os << "laplace(b=" << params_.at("b") << ")";
          break;
        case BuiltinFamily::TwoPoint:
          os << "two_point(c=" << params_.at("c") << ")";
          break;
        case BuiltinFamily::Arcsine:
          os << "arcsine(r=" << params_.at("r") << ")";
          break;
      }
      break;
    }
    case MeasureKind::Discrete:
      os << "discrete(" << atoms_.size() << " atoms)";
      break;
    case MeasureKind::TabulatedCdf:
      os << "tabulated_cdf(" << knots_.size() << " knots)";
      break;
  }
  os << ", p=" << p_target_;
  return os.str();
}

MeasureSpec center(const MeasureSpec& spec) {
  const double m = spec.mean();
  if (!std::isfinite(m)) {
    fail(ErrorCode::NonIntegrableMean, "measure mean is not finite");
  }
  MeasureSpec out = spec;
  if (m == 0.0) return out;
  out.centering_shift_ += m;
  switch (spec.kind()) {
    case MeasureKind::Builtin:
      if (spec.family() == BuiltinFamily::Uniform) {
        out.params_["a"] = spec.param("a") - m;
        out.params_["b"] = spec.param("b") - m;
      }
      break;
    case MeasureKind::Discrete:
      for (Atom& a : out.atoms_) a.x -= m;
      break;
    case MeasureKind::TabulatedCdf:
      for (auto& k : out.knots_) k.first -= m;
      break;
  }
  return out;
}

double normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    fail(ErrorCode::InvalidArgument, "normal_quantile needs u in (0,1)");
  }
  // Acklam's rational approximation, then one Newton step on the CDF.
  static const double A[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double B[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double C[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double D[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (u < plow) {
    const double q = std::sqrt(-2.0 * std::log(u));
    x = (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
        ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  } else if (u <= 1.0 - plow) {
    const double q = u - 0.5;
    const double r = q * q;
    x = (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) *
        q /
        (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - u));
    x = -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q +
          C[5]) /
        ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  }
  const double cdf_x = 0.5 * std::erfc(-x / std::numbers::sqrt2);
  const double pdf_x =
      std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  if (pdf_x > 0.0) x -= (cdf_x - u) / pdf_x;
  return x;
}

bool QuantileFn::unbounded() const {
  return !std::isfinite(support_lo) || !std::isfinite(support_hi);
}

QuantileFn quantile(const MeasureSpec& spec) {
  QuantileFn fn;
  switch (spec.kind()) {
    case MeasureKind::Builtin: {
      switch (spec.family()) {
        case BuiltinFamily::Uniform: {
          const double a = spec.param("a"), b = spec.param("b");
          fn.eval = [a, b](double u) { return a + u * (b - a); };
          fn.support_lo = a;
          fn.support_hi = b;
          break;
        }
        case BuiltinFamily::Gaussian: {
          const double s = spec.param("sigma");
          fn.eval = [s](double u) { return s * normal_quantile(u); };
          fn.support_lo = -std::numeric_limits<double>::infinity();
          fn.support_hi = std::numeric_limits<double>::infinity();
          break;
        }
        case BuiltinFamily::Laplace: {
          const double b = spec.param("b");
          fn.eval = [b](double u) {
            return u <= 0.5 ? b * std::log(2.0 * u)
                            : -b * std::log(2.0 * (1.0 - u));
          };
          fn.support_lo = -std::numeric_limits<double>::infinity();
          fn.support_hi = std::numeric_limits<double>::infinity();
          break;
        }
        case BuiltinFamily::TwoPoint: {
          const double c = spec.param("c");
          fn.eval = [c](double u) { return u <= 0.5 ? -c : c; };
          fn.continuous = false;
          fn.support_lo = -c;
          fn.support_hi = c;
          break;
        }
        case BuiltinFamily::Arcsine: {
          const double r = spec.param("r");
          fn.eval = [r](double u) {
            return -r * std::cos(std::numbers::pi * u);
          };
          fn.support_lo = -r;
          fn.support_hi = r;
          break;
        }
      }
      break;
    }
    case MeasureKind::Discrete: {
      std::vector<double> cum;
      std::vector<double> xs;
      double total = 0.0;
      for (const Atom& a : spec.atoms()) {
        total += a.weight;
        cum.push_back(total);
        xs.push_back(a.x);
      }
      cum.back() = 1.0;
      fn.eval = [cum, xs](double u) {
        // inf{x : F(x) >= u}; jump points sit at the cumulative weights and
        // resolve left-continuously.
        const auto it = std::lower_bound(cum.begin(), cum.end(), u);
        const std::size_t k =
            std::min(static_cast<std::size_t>(it - cum.begin()),
                     xs.size() - 1);
        return xs[k];
      };
      fn.continuous = false;
      fn.support_lo = xs.front();
      fn.support_hi = xs.back();
      break;
    }
    case MeasureKind::TabulatedCdf: {
      const auto knots = spec.knots();
      fn.eval = [knots](double u) {
        // First knot with F >= u, then local linear inversion.
        const auto it = std::lower_bound(
            knots.begin(), knots.end(), u,
            [](const std::pair<double, double>& k, double v) {
              return k.second < v;
            });
        if (it == knots.begin()) return knots.front().first;
        if (it == knots.end()) return knots.back().first;
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        if (hi.second <= lo.second) return hi.first;
        const double t = (u - lo.second) / (hi.second - lo.second);
        return lo.first + t * (hi.first - lo.first);
      };
      bool flat = false;
      for (std::size_t i = 1; i < knots.size(); ++i) {
        if (knots[i].second == knots[i - 1].second) flat = true;
      }
      fn.continuous = !flat;
      fn.support_lo = knots.front().first;
      fn.support_hi = knots.back().first;
      break;
    }
  }
  return fn;
}

double moment(const MeasureSpec& spec, double q) {
  if (!(q > 0.0)) fail(ErrorCode::InvalidArgument, "moment order must be > 0");
  switch (spec.kind()) {
    case MeasureKind::Builtin: {
      switch (spec.family()) {
        case BuiltinFamily::Uniform: {
          const double a = spec.param("a"), b = spec.param("b");
          const auto primitive = [q](double x) {
            // antiderivative of |x|^q: sgn(x)|x|^{q+1}/(q+1)
            return std::copysign(std::pow(std::abs(x), q + 1.0), x) /
                   (q + 1.0);
          };
          return (primitive(b) - primitive(a)) / (b - a);
        }
        case BuiltinFamily::Gaussian: {
          const double s = spec.param("sigma");
          return std::pow(s, q) * std::pow(2.0, q / 2.0) *
                 std::exp(std::lgamma((q + 1.0) / 2.0)) /
                 std::sqrt(std::numbers::pi);
        }
        case BuiltinFamily::Laplace: {
          const double b = spec.param("b");
          return std::pow(b, q) * std::exp(std::lgamma(q + 1.0));
        }
        case BuiltinFamily::TwoPoint:
          return std::pow(spec.param("c"), q);
        case BuiltinFamily::Arcsine: {
          const double r = spec.param("r");
          return std::pow(r, q) * std::exp(std::lgamma((q + 1.0) / 2.0)) /
                 (std::sqrt(std::numbers::pi) *
                  std::exp(std::lgamma(q / 2.0 + 1.0)));
        }
      }
      return 0.0;
    }
    case MeasureKind::Discrete: {
      double m = 0.0;
      for (const Atom& a : spec.atoms()) {
        m += a.weight * std::pow(std::abs(a.x), q);
      }
      return m;
    }
    case MeasureKind::TabulatedCdf: {
      const auto& knots = spec.knots();
      double total = 0.0;
      for (std::size_t i = 1; i < knots.size(); ++i) {
        const double dF = knots[i].second - knots[i - 1].second;
        if (dF <= 0.0) continue;
        const double density = dF / (knots[i].first - knots[i - 1].first);
        total += density * integrate(
                               [q](double x) {
                                 return std::pow(std::abs(x), q);
                               },
                               knots[i - 1].first, knots[i].first);
      }
      return total;
    }
  }
  return 0.0;
}

MeasureSpec MeasureSpec::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument,
         std::string("measure JSON parse error: ") + e.what());
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const double p = j.at("p").get<double>();
    if (kind == "builtin") {
      std::map<std::string, double> params;
      for (auto it = j.at("params").begin(); it != j.at("params").end();
           ++it) {
        params[it.key()] = it.value().get<double>();
      }
      return MeasureSpec::builtin(j.at("name").get<std::string>(), params, p);
    }
    if (kind == "discrete") {
      std::vector<Atom> atoms;
      for (const auto& row : j.at("atoms")) {
        atoms.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
      }
      return MeasureSpec::discrete(std::move(atoms), p);
    }
    if (kind == "tabulated_cdf") {
      std::vector<std::pair<double, double>> knots;
      for (const auto& row : j.at("knots")) {
        knots.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
      }
      return MeasureSpec::tabulated(std::move(knots), p);
    }
    fail(ErrorCode::InvalidArgument, "unknown measure kind: " + kind);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument,
         std::string("measure JSON missing field: ") + e.what());
  }
}

std::string MeasureSpec::to_json_text() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case MeasureKind::Builtin: {
      j["kind"] = "builtin";
      switch (family_) {
        case BuiltinFamily::Uniform: j["name"] = "uniform"; break;
        case BuiltinFamily::Gaussian: j["name"] = "gaussian"; break;
        case BuiltinFamily::Laplace: j["name"] = "laplace"; break;
        case BuiltinFamily::TwoPoint: j["name"] = "two_point"; break;
        case BuiltinFamily::Arcsine: j["name"] = "arcsine"; break;
      }
      j["params"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : params_) j["params"][k] = v;
      break;
    }
    case MeasureKind::Discrete: {
      j["kind"] = "discrete";
      auto rows = nlohmann::ordered_json::array();
      for (const Atom& a : atoms_) rows.push_back({a.x, a.weight});
      j["atoms"] = rows;
      break;
    }
    case MeasureKind::TabulatedCdf: {
      j["kind"] = "tabulated_cdf";
      auto rows = nlohmann::ordered_json::array();
      for (const auto& k : knots_) rows.push_back({k.first, k.second});
      j["knots"] = rows;
      break;
    }
  }
  j["p"] = p_target_;
  if (centering_shift_ != 0.0) j["centering_shift"] = centering_shift_;
  return j.dump();
}

}  // namespace skembed
