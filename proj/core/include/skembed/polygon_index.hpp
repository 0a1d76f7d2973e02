#ifndef SKEMBED_POLYGON_INDEX_HPP
#define SKEMBED_POLYGON_INDEX_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "skembed/geometry.hpp"

namespace skembed {

// Uniform-grid acceleration structure over a closed boundary polyline:
// O(1)-ish containment, nearest-distance, and segment-crossing queries, which
// the samplers hit hundreds of millions of times.
class PolygonIndex {
 public:
  explicit PolygonIndex(const BoundaryCurve& curve, std::size_t cells = 256);

  const BoundaryCurve& curve() const { return curve_; }

  // Even-odd containment; points within `boundary_eps` of the polyline count
  // as outside.
  bool contains(double x, double y) const;

  // Distance to the boundary polyline.
  double distance(double x, double y) const;

  // Distance, but may return any value >= cap when the true distance
  // exceeds cap (cheap far-field early-out).
  double distance_capped(double x, double y, double cap) const;

  std::array<double, 2> nearest_point(double x, double y) const;

  // Index of the boundary edge nearest to the query point.
  std::size_t nearest_edge(double x, double y) const;

  struct Crossing {
    double t = 0.0;  // parameter along the query segment
    double x = 0.0;
    double y = 0.0;
    std::size_t edge = 0;
  };

  // Earliest boundary crossing of the open segment (x0,y0)->(x1,y1).
  std::optional<Crossing> first_crossing(double x0, double y0, double x1,
                                         double y1) const;

  static constexpr double boundary_eps = 1e-12;

 private:
  struct Cell {
    std::vector<std::uint32_t> edges;
    bool center_inside = false;
  };

  std::size_t cell_of(double x, double y) const;
  void locate(double x, double y, long long& cx, long long& cy) const;
  void nearest_projection(double x, double y, std::array<double, 2>& point,
                          std::size_t& edge) const;

  BoundaryCurve curve_;
  std::vector<std::array<double, 2>> seg_a_, seg_b_;  // per edge
  double min_x_ = 0, min_y_ = 0, cell_w_ = 1, cell_h_ = 1;
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<Cell> cells_;
};

}  // namespace skembed

#endif  // SKEMBED_POLYGON_INDEX_HPP
