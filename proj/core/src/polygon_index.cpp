#include "skembed/polygon_index.hpp"

#include <algorithm>
#include <cmath>

#include "skembed/errors.hpp"

namespace skembed {

namespace {

double point_segment_dist2(double px, double py, const std::array<double, 2>& a,
                           const std::array<double, 2>& b) {
  const double ux = b[0] - a[0], uy = b[1] - a[1];
  const double wx = px - a[0], wy = py - a[1];
  const double uu = ux * ux + uy * uy;
  double t = uu > 0.0 ? (wx * ux + wy * uy) / uu : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = wx - t * ux, dy = wy - t * uy;
  return dx * dx + dy * dy;
}

}  // namespace

PolygonIndex::PolygonIndex(const BoundaryCurve& curve, std::size_t cells)
    : curve_(curve) {
  const std::size_t n = curve_.pts.size();
  if (n < 3) {
    fail(ErrorCode::InvalidArgument, "boundary curve needs >= 3 vertices");
  }
  seg_a_.resize(n);
  seg_b_.resize(n);
  double lo_x = curve_.pts[0][0], hi_x = lo_x;
  double lo_y = curve_.pts[0][1], hi_y = lo_y;
  for (std::size_t i = 0; i < n; ++i) {
    seg_a_[i] = curve_.pts[i];
    seg_b_[i] = curve_.pts[(i + 1) % n];
    lo_x = std::min(lo_x, curve_.pts[i][0]);
    hi_x = std::max(hi_x, curve_.pts[i][0]);
    lo_y = std::min(lo_y, curve_.pts[i][1]);
    hi_y = std::max(hi_y, curve_.pts[i][1]);
  }
  const double pad_x = 0.02 * std::max(hi_x - lo_x, 1e-9);
  const double pad_y = 0.02 * std::max(hi_y - lo_y, 1e-9);
  min_x_ = lo_x - pad_x;
  min_y_ = lo_y - pad_y;
  nx_ = ny_ = std::max<std::size_t>(cells, 8);
  cell_w_ = (hi_x - lo_x + 2.0 * pad_x) / static_cast<double>(nx_);
  cell_h_ = (hi_y - lo_y + 2.0 * pad_y) / static_cast<double>(ny_);
  cells_.assign(nx_ * ny_, {});

  // Conservative registration over each edge's bounding box of cells.
  for (std::size_t i = 0; i < n; ++i) {
    const double ex0 = std::min(seg_a_[i][0], seg_b_[i][0]);
    const double ex1 = std::max(seg_a_[i][0], seg_b_[i][0]);
    const double ey0 = std::min(seg_a_[i][1], seg_b_[i][1]);
    const double ey1 = std::max(seg_a_[i][1], seg_b_[i][1]);
    const auto cx0 = static_cast<std::size_t>(
        std::clamp((ex0 - min_x_) / cell_w_, 0.0, double(nx_ - 1)));
    const auto cx1 = static_cast<std::size_t>(
        std::clamp((ex1 - min_x_) / cell_w_, 0.0, double(nx_ - 1)));
    const auto cy0 = static_cast<std::size_t>(
        std::clamp((ey0 - min_y_) / cell_h_, 0.0, double(ny_ - 1)));
    const auto cy1 = static_cast<std::size_t>(
        std::clamp((ey1 - min_y_) / cell_h_, 0.0, double(ny_ - 1)));
    for (std::size_t cy = cy0; cy <= cy1; ++cy) {
      for (std::size_t cx = cx0; cx <= cx1; ++cx) {
        cells_[cy * nx_ + cx].edges.push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  // Row sweep: classify every cell center by crossing parity of the row line.
  std::vector<double> row_hits;
  for (std::size_t cy = 0; cy < ny_; ++cy) {
    const double yc = min_y_ + (static_cast<double>(cy) + 0.5) * cell_h_;
    row_hits.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const double ya = seg_a_[i][1], yb = seg_b_[i][1];
      if ((ya <= yc && yb > yc) || (yb <= yc && ya > yc)) {
        const double t = (yc - ya) / (yb - ya);
        row_hits.push_back(seg_a_[i][0] + t * (seg_b_[i][0] - seg_a_[i][0]));
      }
    }
    std::sort(row_hits.begin(), row_hits.end());
    for (std::size_t cx = 0; cx < nx_; ++cx) {
      const double xc = min_x_ + (static_cast<double>(cx) + 0.5) * cell_w_;
      const auto it = std::upper_bound(row_hits.begin(), row_hits.end(), xc);
      const std::size_t before = static_cast<std::size_t>(it - row_hits.begin());
      cells_[cy * nx_ + cx].center_inside = (before % 2) == 1;
    }
  }
}

void PolygonIndex::locate(double x, double y, long long& cx,
                          long long& cy) const {
  cx = static_cast<long long>(std::floor((x - min_x_) / cell_w_));
  cy = static_cast<long long>(std::floor((y - min_y_) / cell_h_));
}

std::size_t PolygonIndex::cell_of(double x, double y) const {
  long long cx, cy;
  locate(x, y, cx, cy);
  cx = std::clamp<long long>(cx, 0, static_cast<long long>(nx_) - 1);
  cy = std::clamp<long long>(cy, 0, static_cast<long long>(ny_) - 1);
  return static_cast<std::size_t>(cy) * nx_ + static_cast<std::size_t>(cx);
}

bool PolygonIndex::contains(double x, double y) const {
  long long cx, cy;
  locate(x, y, cx, cy);
  if (cx < 0 || cy < 0 || cx >= static_cast<long long>(nx_) ||
      cy >= static_cast<long long>(ny_)) {
    return false;  // outside the padded bounding box
  }
  const Cell& cell = cells_[static_cast<std::size_t>(cy) * nx_ +
                            static_cast<std::size_t>(cx)];
  if (cell.edges.empty()) return cell.center_inside;

  // Boundary points count as outside.
  const double eps2 = boundary_eps * boundary_eps;
  for (std::uint32_t e : cell.edges) {
    if (point_segment_dist2(x, y, seg_a_[e], seg_b_[e]) <= eps2) return false;
  }

  // Parity relative to the pre-classified cell center: the straight segment
  // from (x,y) to the center stays inside this (convex) cell, so only the
  // cell's own edges can cross it.
  const double mx = min_x_ + (static_cast<double>(cx) + 0.5) * cell_w_;
  const double my = min_y_ + (static_cast<double>(cy) + 0.5) * cell_h_;
  const double dx = mx - x, dy = my - y;
  std::size_t crossings = 0;
  for (std::uint32_t e : cell.edges) {
    const double ax = seg_a_[e][0], ay = seg_a_[e][1];
    const double bx = seg_b_[e][0] - ax, by = seg_b_[e][1] - ay;
    const double den = dx * by - dy * bx;
    if (den == 0.0) continue;
    const double wx = ax - x, wy = ay - y;
    const double t = (wx * by - wy * bx) / den;  // along query segment
    const double s = (wx * dy - wy * dx) / (-den);  // along edge
    if (t > 0.0 && t < 1.0 && s >= 0.0 && s < 1.0) ++crossings;
  }
  return cell.center_inside == (crossings % 2 == 0);
}

double PolygonIndex::distance_capped(double x, double y, double cap) const {
  long long cx, cy;
  locate(x, y, cx, cy);
  cx = std::clamp<long long>(cx, 0, static_cast<long long>(nx_) - 1);
  cy = std::clamp<long long>(cy, 0, static_cast<long long>(ny_) - 1);
  double best2 = std::numeric_limits<double>::infinity();
  const long long max_ring =
      static_cast<long long>(std::max(nx_, ny_));
  for (long long r = 0; r <= max_ring; ++r) {
    // Margin: any edge outside the scanned rectangle is at least this far.
    const double rx0 = min_x_ + static_cast<double>(cx - r) * cell_w_;
    const double rx1 = min_x_ + static_cast<double>(cx + r + 1) * cell_w_;
    const double ry0 = min_y_ + static_cast<double>(cy - r) * cell_h_;
    const double ry1 = min_y_ + static_cast<double>(cy + r + 1) * cell_h_;
    const double margin =
        std::min(std::min(x - rx0, rx1 - x), std::min(y - ry0, ry1 - y));
    if (margin > 0.0) {
      const double m2 = margin * margin;
      if (best2 <= m2) break;
      if (cap > 0.0 && margin >= cap && best2 > cap * cap) return cap;
    }
    for (long long dyc = -r; dyc <= r; ++dyc) {
      const long long yy = cy + dyc;
      if (yy < 0 || yy >= static_cast<long long>(ny_)) continue;
      const bool edge_row = (dyc == -r || dyc == r);
      const long long step = edge_row ? 1 : 2 * r;
      for (long long dxc = -r; dxc <= r; dxc += (step == 0 ? 1 : step)) {
        const long long xx = cx + dxc;
        if (xx < 0 || xx >= static_cast<long long>(nx_)) continue;
        const Cell& cell = cells_[static_cast<std::size_t>(yy) * nx_ +
                                  static_cast<std::size_t>(xx)];
        for (std::uint32_t e : cell.edges) {
          best2 = std::min(best2,
                           point_segment_dist2(x, y, seg_a_[e], seg_b_[e]));
        }
        if (step == 0) break;
      }
    }
  }
  if (!std::isfinite(best2)) {
    fail(ErrorCode::DistanceQueryFailure,
         "no boundary edges found by distance query");
  }
  return std::sqrt(best2);
}

double PolygonIndex::distance(double x, double y) const {
  return distance_capped(x, y, 0.0);
}

void PolygonIndex::nearest_projection(double x, double y,
                                      std::array<double, 2>& point,
                                      std::size_t& edge) const {
  long long cx, cy;
  locate(x, y, cx, cy);
  cx = std::clamp<long long>(cx, 0, static_cast<long long>(nx_) - 1);
  cy = std::clamp<long long>(cy, 0, static_cast<long long>(ny_) - 1);
  double best2 = std::numeric_limits<double>::infinity();
  point = {x, y};
  edge = 0;
  const long long max_ring = static_cast<long long>(std::max(nx_, ny_));
  for (long long r = 0; r <= max_ring; ++r) {
    const double rx0 = min_x_ + static_cast<double>(cx - r) * cell_w_;
    const double rx1 = min_x_ + static_cast<double>(cx + r + 1) * cell_w_;
    const double ry0 = min_y_ + static_cast<double>(cy - r) * cell_h_;
    const double ry1 = min_y_ + static_cast<double>(cy + r + 1) * cell_h_;
    const double margin =
        std::min(std::min(x - rx0, rx1 - x), std::min(y - ry0, ry1 - y));
    if (margin > 0.0 && best2 <= margin * margin) break;
    for (long long dyc = -r; dyc <= r; ++dyc) {
      const long long yy = cy + dyc;
      if (yy < 0 || yy >= static_cast<long long>(ny_)) continue;
      const bool edge_row = (dyc == -r || dyc == r);
      const long long step = edge_row ? 1 : 2 * r;
      for (long long dxc = -r; dxc <= r; dxc += (step == 0 ? 1 : step)) {
        const long long xx = cx + dxc;
        if (xx < 0 || xx >= static_cast<long long>(nx_)) continue;
        const Cell& cell = cells_[static_cast<std::size_t>(yy) * nx_ +
                                  static_cast<std::size_t>(xx)];
        for (std::uint32_t e : cell.edges) {
          const auto& a = seg_a_[e];
          const auto& b = seg_b_[e];
          const double ux = b[0] - a[0], uy = b[1] - a[1];
          const double uu = ux * ux + uy * uy;
          double t = uu > 0.0
                         ? ((x - a[0]) * ux + (y - a[1]) * uy) / uu
                         : 0.0;
          t = std::clamp(t, 0.0, 1.0);
          const double px = a[0] + t * ux, py = a[1] + t * uy;
          const double d2 = (px - x) * (px - x) + (py - y) * (py - y);
          if (d2 < best2) {
            best2 = d2;
            point = {px, py};
            edge = e;
          }
        }
        if (step == 0) break;
      }
    }
  }
}

std::array<double, 2> PolygonIndex::nearest_point(double x, double y) const {
  std::array<double, 2> p;
  std::size_t e;
  nearest_projection(x, y, p, e);
  return p;
}

std::size_t PolygonIndex::nearest_edge(double x, double y) const {
  std::array<double, 2> p;
  std::size_t e;
  nearest_projection(x, y, p, e);
  return e;
}

std::optional<PolygonIndex::Crossing> PolygonIndex::first_crossing(
    double x0, double y0, double x1, double y1) const {
  // Grid walk along the query segment, gathering candidate edges.
  std::vector<std::uint32_t> candidates;
  long long cx, cy, ex, ey;
  locate(x0, y0, cx, cy);
  locate(x1, y1, ex, ey);
  const long long lox = std::min(cx, ex), hix = std::max(cx, ex);
  const long long loy = std::min(cy, ey), hiy = std::max(cy, ey);
  // The bounding cells of the step are few (steps are short relative to the
  // domain); scan that rectangle, clamped to the grid.
  for (long long yy = std::max<long long>(loy, 0);
       yy <= std::min<long long>(hiy, static_cast<long long>(ny_) - 1); ++yy) {
    for (long long xx = std::max<long long>(lox, 0);
         xx <= std::min<long long>(hix, static_cast<long long>(nx_) - 1);
         ++xx) {
      const Cell& cell = cells_[static_cast<std::size_t>(yy) * nx_ +
                                static_cast<std::size_t>(xx)];
      candidates.insert(candidates.end(), cell.edges.begin(),
                        cell.edges.end());
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  const double dx = x1 - x0, dy = y1 - y0;
  std::optional<Crossing> best;
  for (std::uint32_t e : candidates) {
    const double ax = seg_a_[e][0], ay = seg_a_[e][1];
    const double bx = seg_b_[e][0] - ax, by = seg_b_[e][1] - ay;
    const double den = dx * by - dy * bx;
    if (den == 0.0) continue;
    const double wx = ax - x0, wy = ay - y0;
    const double t = (wx * by - wy * bx) / den;
    const double s = (wx * dy - wy * dx) / (-den);
    if (t >= 0.0 && t <= 1.0 && s >= 0.0 && s <= 1.0) {
      if (!best || t < best->t) {
        best = Crossing{t, x0 + t * dx, y0 + t * dy, e};
      }
    }
  }
  return best;
}

}  // namespace skembed
