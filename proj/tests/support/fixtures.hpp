#ifndef SKEMBED_TESTS_FIXTURES_HPP
#define SKEMBED_TESTS_FIXTURES_HPP

#include <cmath>
#include <numbers>

#include "skembed/geometry.hpp"

namespace skembed::fixtures {

inline BoundaryCurve circle(double radius = 1.0, std::size_t n = 4096,
                            double cx = 0.0, double cy = 0.0) {
  BoundaryCurve curve;
  curve.pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(n);
    curve.pts.push_back({cx + radius * std::cos(t), cy + radius * std::sin(t)});
  }
  return curve;
}

inline BoundaryCurve rectangle(double x0, double y0, double x1, double y1,
                               std::size_t per_side = 64) {
  BoundaryCurve curve;
  const auto add_side = [&](double ax, double ay, double bx, double by) {
    for (std::size_t i = 0; i < per_side; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(per_side);
      curve.pts.push_back({ax + t * (bx - ax), ay + t * (by - ay)});
    }
  };
  add_side(x0, y0, x1, y0);
  add_side(x1, y0, x1, y1);
  add_side(x1, y1, x0, y1);
  add_side(x0, y1, x0, y0);
  return curve;
}

// Vertical strip {|Re w| < half_width} truncated at |Im| <= cap.
inline BoundaryCurve vertical_strip(double half_width, double cap,
                                    std::size_t per_side = 512) {
  return rectangle(-half_width, -cap, half_width, cap, per_side);
}

// Horizontal strip {|Im z| < half_height} truncated at |Re| <= cap, with the
// truncation sides marked artificial (they stand in for the line at
// infinity).
inline BoundaryCurve horizontal_strip(double half_height, double cap,
                                      std::size_t per_side = 512) {
  BoundaryCurve curve = rectangle(-cap, -half_height, cap, half_height,
                                  per_side);
  curve.artificial_edge.assign(curve.pts.size(), 0);
  for (std::size_t i = 0; i < curve.pts.size(); ++i) {
    const auto& a = curve.pts[i];
    const auto& b = curve.pts[(i + 1) % curve.pts.size()];
    if (std::abs(a[0]) > cap * 0.999 && std::abs(b[0]) > cap * 0.999 &&
        std::abs(a[0] - b[0]) < 1e-12) {
      curve.artificial_edge[i] = 1;
    }
  }
  curve.support_unbounded = true;
  curve.window = ClipWindow{cap, half_height};
  return curve;
}

// Angular wedge {0 < Arg z < alpha} clipped to radius-ish box side R.
inline BoundaryCurve wedge(double alpha, double R, std::size_t per_side = 512) {
  BoundaryCurve curve;
  const auto add_segment = [&](double ax, double ay, double bx, double by) {
    for (std::size_t i = 0; i < per_side; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(per_side);
      curve.pts.push_back({ax + t * (bx - ax), ay + t * (by - ay)});
    }
  };
  add_segment(0.0, 0.0, R, 0.0);
  // Arc at radius R from angle 0 to alpha.
  for (std::size_t i = 0; i < per_side; ++i) {
    const double t = alpha * static_cast<double>(i) /
                     static_cast<double>(per_side);
    curve.pts.push_back({R * std::cos(t), R * std::sin(t)});
  }
  add_segment(R * std::cos(alpha), R * std::sin(alpha), 0.0, 0.0);
  return curve;
}

// Half-plane {Re z > -offset} boxed to [-offset, span] x [-span, span].
inline BoundaryCurve half_plane(double offset, double span,
                                std::size_t per_side = 512) {
  return rectangle(-offset, -span, span, span, per_side);
}

// C \ {|Re z| <= notch_x, |Im z| >= notch_y}, boxed to [-X, X]^2: a plus
// shaped domain whose arms contain full half-planes in the limit.
inline BoundaryCurve cross_domain(double notch_x = 1.0, double notch_y = 1.0,
                                  double X = 40.0, std::size_t per_side = 96) {
  BoundaryCurve curve;
  const auto add_segment = [&](double ax, double ay, double bx, double by) {
    for (std::size_t i = 0; i < per_side; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(per_side);
      curve.pts.push_back({ax + t * (bx - ax), ay + t * (by - ay)});
    }
  };
  add_segment(X, -X, X, X);                    // right side up
  add_segment(X, X, notch_x, X);               // top toward notch
  add_segment(notch_x, X, notch_x, notch_y);   // down the notch wall
  add_segment(notch_x, notch_y, -notch_x, notch_y);  // across the band
  add_segment(-notch_x, notch_y, -notch_x, X);  // up the other wall
  add_segment(-notch_x, X, -X, X);             // to the left arm
  add_segment(-X, X, -X, -X);                  // left side down
  add_segment(-X, -X, -notch_x, -X);
  add_segment(-notch_x, -X, -notch_x, -notch_y);
  add_segment(-notch_x, -notch_y, notch_x, -notch_y);
  add_segment(notch_x, -notch_y, notch_x, -X);
  add_segment(notch_x, -X, X, -X);
  return curve;
}

// Rectangle with a mirrored pair of horizontal slits entering from the right:
// symmetric, all exit-time moments finite, but not vertically convex.
inline BoundaryCurve slit_domain(double slit_y = 1.0, double slit_depth = 2.0,
                                 double half_gap = 0.02,
                                 std::size_t per_side = 64) {
  BoundaryCurve curve;
  const double X = 3.0, Y = 2.0;
  const double x_tip = X - slit_depth;
  const auto add_segment = [&](double ax, double ay, double bx, double by) {
    for (std::size_t i = 0; i < per_side; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(per_side);
      curve.pts.push_back({ax + t * (bx - ax), ay + t * (by - ay)});
    }
  };
  add_segment(X, -Y, X, -slit_y - half_gap);
  add_segment(X, -slit_y - half_gap, x_tip, -slit_y - half_gap);
  add_segment(x_tip, -slit_y - half_gap, x_tip, -slit_y + half_gap);
  add_segment(x_tip, -slit_y + half_gap, X, -slit_y + half_gap);
  add_segment(X, -slit_y + half_gap, X, slit_y - half_gap);
  add_segment(X, slit_y - half_gap, x_tip, slit_y - half_gap);
  add_segment(x_tip, slit_y - half_gap, x_tip, slit_y + half_gap);
  add_segment(x_tip, slit_y + half_gap, X, slit_y + half_gap);
  add_segment(X, slit_y + half_gap, X, Y);
  add_segment(X, Y, -X, Y);
  add_segment(-X, Y, -X, -Y);
  add_segment(-X, -Y, X, -Y);
  return curve;
}

// Parabola {x > y^2/4 - 1} sampled by v in [-v_max, v_max], closed by a
// vertical cap at the open end (marked artificial).
inline BoundaryCurve parabola_domain(double v_max = 16.0,
                                     std::size_t n = 4096) {
  BoundaryCurve curve;
  curve.support_unbounded = true;
  for (std::size_t i = 0; i <= n; ++i) {
    const double v = v_max - 2.0 * v_max * static_cast<double>(i) /
                                 static_cast<double>(n);
    curve.pts.push_back({v * v / 4.0 - 1.0, v});
  }
  curve.artificial_edge.assign(curve.pts.size(), 0);
  // Closing edge (last -> first) is the vertical cap at the open end.
  curve.artificial_edge[curve.pts.size() - 1] = 1;
  return curve;
}

// Right hyperbola region {x > 0, x^2 - y^2 > 1} sampled by y in
// [-y_max, y_max], closed by a vertical cap (artificial).
inline BoundaryCurve hyperbola_domain(double y_max = 40.0,
                                      std::size_t n = 4096) {
  BoundaryCurve curve;
  curve.support_unbounded = true;
  const double x_cap = std::sqrt(1.0 + y_max * y_max) + 1.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double y = y_max - 2.0 * y_max * static_cast<double>(i) /
                                 static_cast<double>(n);
    curve.pts.push_back({std::sqrt(1.0 + y * y), y});
  }
  curve.pts.push_back({x_cap, -y_max});
  curve.pts.push_back({x_cap, y_max});
  curve.artificial_edge.assign(curve.pts.size(), 0);
  curve.artificial_edge[curve.pts.size() - 3] = 1;
  curve.artificial_edge[curve.pts.size() - 2] = 1;
  curve.artificial_edge[curve.pts.size() - 1] = 1;
  return curve;
}

// Ellipse x^2/cosh^2 R + y^2/sinh^2 R = 1.
inline BoundaryCurve ellipse_domain(double R, std::size_t n = 4096) {
  BoundaryCurve curve;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(n);
    curve.pts.push_back({std::cosh(R) * std::cos(t),
                         std::sinh(R) * std::sin(t)});
  }
  return curve;
}

}  // namespace skembed::fixtures

#endif  // SKEMBED_TESTS_FIXTURES_HPP
