#ifndef FCIT_GEOMETRY_HPP
#define FCIT_GEOMETRY_HPP

#include <variant>
#include <vector>

#include "fcit/config.hpp"

namespace fcit {

// Workspace obstacles. Coordinate vectors have the workspace dimension
// (2 or 3); all radii are strictly positive.

struct Sphere {
  std::vector<double> center;
  double radius = 0.0;
};

struct AxisAlignedBox {
  std::vector<double> lo;
  std::vector<double> hi;
};

struct Capsule {
  std::vector<double> a;
  std::vector<double> b;
  double radius = 0.0;
};

using Obstacle = std::variant<Sphere, AxisAlignedBox, Capsule>;

struct Environment {
  std::vector<Obstacle> obstacles;

  /// Checks radii, box extents and coordinate dimensions; throws
  /// ContractViolation on the first malformed obstacle.
  void validate(int workspace_dim) const;
};

// Shared distance kernels. The scalar and lane-parallel validators both call
// these, which keeps their results bit-identical.

inline double dist2_2d(double dx, double dy) { return dx * dx + dy * dy; }
inline double dist2_3d(double dx, double dy, double dz) { return dx * dx + dy * dy + dz * dz; }

inline double clamp01(double t) { return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t); }

/// Squared distance from point p to segment a + t*(u), t in [0,1], with
/// inv_len2 = 1/|u|^2 precomputed (0 for a degenerate segment).
inline double dist2_point_segment_2d(double px, double py, double ax, double ay, double ux,
                                     double uy, double inv_len2) {
  const double t = clamp01(((px - ax) * ux + (py - ay) * uy) * inv_len2);
  return dist2_2d(px - (ax + t * ux), py - (ay + t * uy));
}

inline double dist2_point_segment_3d(double px, double py, double pz, double ax, double ay,
                                     double az, double ux, double uy, double uz, double inv_len2) {
  const double t = clamp01(((px - ax) * ux + (py - ay) * uy + (pz - az) * uz) * inv_len2);
  return dist2_3d(px - (ax + t * ux), py - (ay + t * uy), pz - (az + t * uz));
}

/// Squared distance between segments [a,b] and [c,d] in the plane.
double dist2_segment_segment_2d(double ax, double ay, double bx, double by, double cx, double cy,
                                double dx, double dy);

/// True iff segment [a,b] meets the box; strict restricts to the open
/// interior (touching the boundary does not count).
bool segment_intersects_box_2d(double ax, double ay, double bx, double by, double lx, double ly,
                               double hx, double hy, bool strict);

/// Squared distance from segment [a,b] to the closed box (0 when they meet).
double dist2_segment_box_2d(double ax, double ay, double bx, double by, double lx, double ly,
                            double hx, double hy);

}  // namespace fcit

#endif  // FCIT_GEOMETRY_HPP
