#ifndef SKEMBED_GEOMETRY_HPP
#define SKEMBED_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace skembed {

struct DomainArtifact;

struct ClipWindow {
  double half_width = 0.0;   // |x| <= half_width
  double half_height = 0.0;  // |y| <= half_height

  bool operator==(const ClipWindow&) const = default;
};

// Closed boundary polyline, vertices ordered along the curve. Edge i joins
// vertex i to vertex (i+1) mod n. Edges introduced by window clipping are
// flagged artificial so simulations can meter probability leakage.
struct BoundaryCurve {
  std::vector<std::array<double, 2>> pts;
  bool support_unbounded = false;
  std::optional<ClipWindow> window;
  std::vector<std::uint8_t> artificial_edge;  // empty means none

  std::size_t size() const { return pts.size(); }
  bool edge_artificial(std::size_t i) const {
    return !artificial_edge.empty() && artificial_edge[i] != 0;
  }
};

BoundaryCurve curve_from_artifact(const DomainArtifact& artifact);

// Clip against [-w.half_width, w.half_width] x [-w.half_height,
// w.half_height] (Sutherland-Hodgman). Output edges lying on the frame are
// marked artificial.
BoundaryCurve clip_to_window(const BoundaryCurve& curve, const ClipWindow& w);

// Symmetric Hausdorff distance between two polylines (vertex-to-segment).
double hausdorff_distance(const std::vector<std::array<double, 2>>& a,
                          const std::vector<std::array<double, 2>>& b);

// True when the curve coincides with its reflection across the real axis
// within Hausdorff distance tol.
bool is_symmetric(const BoundaryCurve& curve, double tol);

// Vertical-line single-crossing test on the arcs between the extreme-x
// vertices: for a symmetric Jordan boundary this is equivalent to the
// domain containing [z, conj(z)] for each of its points. Throws NotSymmetric
// when the symmetry precondition fails.
bool is_delta_convex(const BoundaryCurve& curve, double tol);

// No two non-adjacent edges intersect (x-sweep over edge intervals).
bool is_simple(const BoundaryCurve& curve);

// Even-odd containment; points within 1e-12 of the boundary count as
// outside. Convenience wrapper over PolygonIndex for one-off queries.
bool contains(const BoundaryCurve& curve, double x, double y);

struct ApertureResult {
  std::vector<double> radii;
  std::vector<double> arc_measure;  // max angular measure of an inside arc
  double estimate = 0.0;            // value at the largest radius
};

// Maximal angular measure of a circle arc inside the domain, per radius.
// Requires the domain to be starlike about the origin (checked by ray
// sampling; throws NotStarlike).
ApertureResult aperture(const BoundaryCurve& curve,
                        const std::vector<double>& radii);

// pi / (2 * aperture estimate): the exit-time moment cutoff exponent.
double hardy_number(const BoundaryCurve& curve,
                    const std::vector<double>& radii);

}  // namespace skembed

#endif  // SKEMBED_GEOMETRY_HPP
