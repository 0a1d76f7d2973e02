#include "skembed/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "skembed/construction.hpp"
#include "skembed/errors.hpp"
#include "skembed/polygon_index.hpp"

namespace skembed {

namespace {

constexpr double kPi = std::numbers::pi;

double cross2(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

// Proper or improper intersection of two segments, including collinear
// overlap of positive length.
bool segments_intersect(const std::array<double, 2>& p1,
                        const std::array<double, 2>& p2,
                        const std::array<double, 2>& q1,
                        const std::array<double, 2>& q2) {
  const double d1 = cross2(q2[0] - q1[0], q2[1] - q1[1], p1[0] - q1[0],
                           p1[1] - q1[1]);
  const double d2 = cross2(q2[0] - q1[0], q2[1] - q1[1], p2[0] - q1[0],
                           p2[1] - q1[1]);
  const double d3 = cross2(p2[0] - p1[0], p2[1] - p1[1], q1[0] - p1[0],
                           q1[1] - p1[1]);
  const double d4 = cross2(p2[0] - p1[0], p2[1] - p1[1], q2[0] - p1[0],
                           q2[1] - p1[1]);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  const auto on_segment = [](const std::array<double, 2>& a,
                             const std::array<double, 2>& b,
                             const std::array<double, 2>& c) {
    return std::min(a[0], b[0]) <= c[0] && c[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= c[1] && c[1] <= std::max(a[1], b[1]);
  };
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

}  // namespace

BoundaryCurve curve_from_artifact(const DomainArtifact& artifact) {
  BoundaryCurve curve;
  curve.support_unbounded = artifact.support_unbounded;
  curve.pts.reserve(artifact.x.size());
  for (std::size_t j = 0; j < artifact.x.size(); ++j) {
    const std::array<double, 2> p{artifact.x[j], artifact.y[j]};
    if (!curve.pts.empty() && curve.pts.back() == p) continue;
    curve.pts.push_back(p);
  }
  while (curve.pts.size() > 1 && curve.pts.front() == curve.pts.back()) {
    curve.pts.pop_back();
  }
  if (curve.pts.size() < 16) {
    fail(ErrorCode::InvalidArgument, "boundary needs >= 16 distinct vertices");
  }
  return curve;
}

BoundaryCurve clip_to_window(const BoundaryCurve& curve, const ClipWindow& w) {
  if (!(w.half_width > 0.0 && w.half_height > 0.0)) {
    fail(ErrorCode::InvalidArgument, "clip window must be positive");
  }
  // Sutherland-Hodgman against the four half-planes of the window.
  struct Plane {
    double nx, ny, c;  // inside: nx*x + ny*y <= c
  };
  const Plane planes[4] = {{1, 0, w.half_width},
                           {-1, 0, w.half_width},
                           {0, 1, w.half_height},
                           {0, -1, w.half_height}};
  std::vector<std::array<double, 2>> poly = curve.pts;
  for (const Plane& pl : planes) {
    std::vector<std::array<double, 2>> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n && n >= 2; ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % n];
      const double da = pl.nx * a[0] + pl.ny * a[1] - pl.c;
      const double db = pl.nx * b[0] + pl.ny * b[1] - pl.c;
      const bool ina = da <= 0.0, inb = db <= 0.0;
      if (ina) out.push_back(a);
      if (ina != inb) {
        const double t = da / (da - db);
        out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
      }
    }
    poly.swap(out);
  }
  if (poly.size() < 3) {
    fail(ErrorCode::InvalidArgument, "clip window excludes the whole curve");
  }
  // Drop duplicate consecutive vertices produced by the clip.
  std::vector<std::array<double, 2>> dedup;
  for (const auto& p : poly) {
    if (dedup.empty() || std::abs(dedup.back()[0] - p[0]) > 1e-14 ||
        std::abs(dedup.back()[1] - p[1]) > 1e-14) {
      dedup.push_back(p);
    }
  }
  while (dedup.size() > 1 && std::abs(dedup.front()[0] - dedup.back()[0]) <= 1e-14 &&
         std::abs(dedup.front()[1] - dedup.back()[1]) <= 1e-14) {
    dedup.pop_back();
  }

  BoundaryCurve clipped;
  clipped.pts = std::move(dedup);
  clipped.support_unbounded = curve.support_unbounded;
  clipped.window = w;
  clipped.artificial_edge.assign(clipped.pts.size(), 0);
  const double fx = w.half_width * (1.0 - 1e-12);
  const double fy = w.half_height * (1.0 - 1e-12);
  for (std::size_t i = 0; i < clipped.pts.size(); ++i) {
    const auto& a = clipped.pts[i];
    const auto& b = clipped.pts[(i + 1) % clipped.pts.size()];
    const bool on_frame =
        (a[0] >= fx && b[0] >= fx) || (a[0] <= -fx && b[0] <= -fx) ||
        (a[1] >= fy && b[1] >= fy) || (a[1] <= -fy && b[1] <= -fy);
    clipped.artificial_edge[i] = on_frame ? 1 : 0;
  }
  return clipped;
}

double hausdorff_distance(const std::vector<std::array<double, 2>>& a,
                          const std::vector<std::array<double, 2>>& b) {
  if (a.size() < 3 || b.size() < 3) {
    fail(ErrorCode::InvalidArgument, "hausdorff needs closed curves");
  }
  BoundaryCurve ca, cb;
  ca.pts = a;
  cb.pts = b;
  const PolygonIndex ia(ca);
  const PolygonIndex ib(cb);
  double h = 0.0;
  for (const auto& p : a) h = std::max(h, ib.distance(p[0], p[1]));
  for (const auto& p : b) h = std::max(h, ia.distance(p[0], p[1]));
  return h;
}

bool is_symmetric(const BoundaryCurve& curve, double tol) {
  std::vector<std::array<double, 2>> reflected(curve.pts.size());
  for (std::size_t i = 0; i < curve.pts.size(); ++i) {
    reflected[i] = {curve.pts[i][0], -curve.pts[i][1]};
  }
  return hausdorff_distance(curve.pts, reflected) <= tol;
}

bool is_delta_convex(const BoundaryCurve& curve, double tol) {
  if (!is_symmetric(curve, std::max(tol, 1e-8))) {
    fail(ErrorCode::NotSymmetric,
         "delta-convexity is defined for curves symmetric about the real "
         "axis");
  }
  const std::size_t n = curve.pts.size();
  std::size_t imin = 0, imax = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (curve.pts[i][0] < curve.pts[imin][0]) imin = i;
    if (curve.pts[i][0] > curve.pts[imax][0]) imax = i;
  }
  // Each arc between the extreme-x vertices must be monotone in x, i.e. the
  // upper and lower boundary are single-valued graphs over x.
  const auto arc_monotone = [&](std::size_t from, std::size_t to) {
    double hi = curve.pts[from][0];
    for (std::size_t i = from; i != to; i = (i + 1) % n) {
      const double x = curve.pts[(i + 1) % n][0];
      if (x < hi - tol) return false;
      hi = std::max(hi, x);
    }
    return true;
  };
  const auto arc_antimonotone = [&](std::size_t from, std::size_t to) {
    double lo = curve.pts[from][0];
    for (std::size_t i = from; i != to; i = (i + 1) % n) {
      const double x = curve.pts[(i + 1) % n][0];
      if (x > lo + tol) return false;
      lo = std::min(lo, x);
    }
    return true;
  };
  return arc_monotone(imin, imax) && arc_antimonotone(imax, imin);
}

bool is_simple(const BoundaryCurve& curve) {
  const std::size_t n = curve.pts.size();
  if (n < 3) return false;
  // Candidate pairs from a uniform grid: two edges can only intersect if
  // some cell contains both of their bounding boxes' cells.
  double lo_x = curve.pts[0][0], hi_x = lo_x, lo_y = curve.pts[0][1],
         hi_y = lo_y;
  for (const auto& p : curve.pts) {
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  }
  const std::size_t cells = 512;
  const double w = std::max(hi_x - lo_x, 1e-12) / static_cast<double>(cells);
  const double h = std::max(hi_y - lo_y, 1e-12) / static_cast<double>(cells);
  std::vector<std::vector<std::uint32_t>> grid(cells * cells);
  const auto clamp_cell = [&](double v, double lo, double step) {
    return static_cast<std::size_t>(std::clamp(
        (v - lo) / step, 0.0, static_cast<double>(cells - 1)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = curve.pts[i];
    const auto& b = curve.pts[(i + 1) % n];
    const std::size_t cx0 = clamp_cell(std::min(a[0], b[0]), lo_x, w);
    const std::size_t cx1 = clamp_cell(std::max(a[0], b[0]), lo_x, w);
    const std::size_t cy0 = clamp_cell(std::min(a[1], b[1]), lo_y, h);
    const std::size_t cy1 = clamp_cell(std::max(a[1], b[1]), lo_y, h);
    for (std::size_t cy = cy0; cy <= cy1; ++cy) {
      for (std::size_t cx = cx0; cx <= cx1; ++cx) {
        grid[cy * cells + cx].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  std::vector<std::uint64_t> pairs;
  for (const auto& bucket : grid) {
    for (std::size_t u = 0; u < bucket.size(); ++u) {
      for (std::size_t v = u + 1; v < bucket.size(); ++v) {
        const std::uint32_t i = std::min(bucket[u], bucket[v]);
        const std::uint32_t j = std::max(bucket[u], bucket[v]);
        // Skip adjacent edges (shared vertex), including the wrap pair.
        if (j == i + 1 || (i == 0 && j == n - 1)) continue;
        pairs.push_back((static_cast<std::uint64_t>(i) << 32) | j);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (std::uint64_t key : pairs) {
    const auto i = static_cast<std::size_t>(key >> 32);
    const auto j = static_cast<std::size_t>(key & 0xffffffffu);
    if (segments_intersect(curve.pts[i], curve.pts[(i + 1) % n],
                           curve.pts[j], curve.pts[(j + 1) % n])) {
      return false;
    }
  }
  return true;
}

bool contains(const BoundaryCurve& curve, double x, double y) {
  const PolygonIndex index(curve);
  return index.contains(x, y);
}

namespace {

void check_starlike(const BoundaryCurve& curve) {
  const std::size_t n = curve.pts.size();
  const std::size_t directions = 720;
  for (std::size_t k = 0; k < directions; ++k) {
    // Half-offset plus an irrational nudge keeps rays off vertices and axes.
    const double ang = (static_cast<double>(k) + 0.5) * 2.0 * kPi /
                           static_cast<double>(directions) +
                       1e-4;
    const double dx = std::cos(ang), dy = std::sin(ang);
    std::vector<double> hits;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = curve.pts[i];
      const auto& b = curve.pts[(i + 1) % n];
      const double ex = b[0] - a[0], ey = b[1] - a[1];
      const double den = dx * ey - dy * ex;
      if (std::abs(den) < 1e-14) continue;
      const double t = (a[0] * ey - a[1] * ex) / den;   // along ray
      const double s = (a[0] * dy - a[1] * dx) / -den;  // along edge
      if (t > 1e-9 && s >= 0.0 && s < 1.0) hits.push_back(t);
    }
    std::sort(hits.begin(), hits.end());
    std::size_t distinct = 0;
    double last = -1.0;
    for (double t : hits) {
      if (distinct == 0 || t > last * (1.0 + 1e-7) + 1e-12) ++distinct;
      last = t;
    }
    if (distinct > 1) {
      fail(ErrorCode::NotStarlike,
           "a ray from the origin crosses the boundary more than once");
    }
  }
}

}  // namespace

ApertureResult aperture(const BoundaryCurve& curve,
                        const std::vector<double>& radii) {
  if (radii.empty()) {
    fail(ErrorCode::InvalidArgument, "aperture needs at least one radius");
  }
  check_starlike(curve);
  const PolygonIndex index(curve);
  ApertureResult out;
  out.radii = radii;
  std::sort(out.radii.begin(), out.radii.end());
  const std::size_t n = curve.pts.size();
  for (double r : out.radii) {
    std::vector<double> angles;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = curve.pts[i];
      const auto& b = curve.pts[(i + 1) % n];
      const double ex = b[0] - a[0], ey = b[1] - a[1];
      const double A = ex * ex + ey * ey;
      if (A == 0.0) continue;
      const double B = 2.0 * (a[0] * ex + a[1] * ey);
      const double C = a[0] * a[0] + a[1] * a[1] - r * r;
      const double disc = B * B - 4.0 * A * C;
      if (disc < 0.0) continue;
      const double sq = std::sqrt(disc);
      for (const double t : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)}) {
        if (t >= 0.0 && t < 1.0) {
          angles.push_back(std::atan2(a[1] + t * ey, a[0] + t * ex));
        }
      }
    }
    double measure;
    if (angles.empty()) {
      measure = index.contains(r * std::cos(0.1234), r * std::sin(0.1234))
                    ? 2.0 * kPi
                    : 0.0;
    } else {
      std::sort(angles.begin(), angles.end());
      measure = 0.0;
      for (std::size_t i = 0; i < angles.size(); ++i) {
        const double a0 = angles[i];
        const double a1 =
            i + 1 < angles.size() ? angles[i + 1] : angles[0] + 2.0 * kPi;
        const double gap = a1 - a0;
        if (gap <= 1e-12) continue;
        const double mid = a0 + 0.5 * gap;
        if (index.contains(r * std::cos(mid), r * std::sin(mid))) {
          measure = std::max(measure, gap);
        }
      }
    }
    out.arc_measure.push_back(measure);
  }
  out.estimate = out.arc_measure.back();
  return out;
}

double hardy_number(const BoundaryCurve& curve,
                    const std::vector<double>& radii) {
  const ApertureResult ap = aperture(curve, radii);
  if (!(ap.estimate > 0.0)) {
    fail(ErrorCode::InvalidArgument,
         "aperture estimate vanished; hardy number undefined");
  }
  return kPi / (2.0 * ap.estimate);
}

}  // namespace skembed
