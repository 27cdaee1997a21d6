#include "fcit/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fcit {

namespace {

void check_dim(const std::vector<double>& v, int wd, const char* what) {
  if (static_cast<int>(v.size()) != wd) {
    throw ContractViolation(std::string("obstacle ") + what + ": expected " + std::to_string(wd) +
                            " coordinates");
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw ContractViolation(std::string("obstacle ") + what + ": non-finite coordinate");
  }
}

}  // namespace

void Environment::validate(int workspace_dim) const {
  for (const Obstacle& obs : obstacles) {
    if (const auto* s = std::get_if<Sphere>(&obs)) {
      check_dim(s->center, workspace_dim, "sphere center");
      if (!(s->radius > 0.0)) throw ContractViolation("sphere radius must be > 0");
    } else if (const auto* b = std::get_if<AxisAlignedBox>(&obs)) {
      check_dim(b->lo, workspace_dim, "box min");
      check_dim(b->hi, workspace_dim, "box max");
      for (std::size_t i = 0; i < b->lo.size(); ++i) {
        if (!(b->lo[i] < b->hi[i])) throw ContractViolation("box min < max required per axis");
      }
    } else if (const auto* c = std::get_if<Capsule>(&obs)) {
      check_dim(c->a, workspace_dim, "capsule endpoint");
      check_dim(c->b, workspace_dim, "capsule endpoint");
      if (!(c->radius > 0.0)) throw ContractViolation("capsule radius must be > 0");
    }
  }
}

double dist2_segment_segment_2d(double ax, double ay, double bx, double by, double cx, double cy,
                                double dx, double dy) {
  // Closest points of two segments via clamped parametric minimization
  // (Ericson, Real-Time Collision Detection, 2D form).
  const double d1x = bx - ax, d1y = by - ay;
  const double d2x = dx - cx, d2y = dy - cy;
  const double rx = ax - cx, ry = ay - cy;
  const double a = d1x * d1x + d1y * d1y;
  const double e = d2x * d2x + d2y * d2y;
  const double f = d2x * rx + d2y * ry;

  double s = 0.0, t = 0.0;
  constexpr double kEps = 0.0;
  if (a <= kEps && e <= kEps) {
    return dist2_2d(rx, ry);
  }
  if (a <= kEps) {
    t = clamp01(f / e);
  } else {
    const double c = d1x * rx + d1y * ry;
    if (e <= kEps) {
      s = clamp01(-c / a);
    } else {
      const double b = d1x * d2x + d1y * d2y;
      const double denom = a * e - b * b;
      if (denom > 0.0) s = clamp01((b * f - c * e) / denom);
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = clamp01(-c / a);
      } else if (t > 1.0) {
        t = 1.0;
        s = clamp01((b - c) / a);
      }
    }
  }
  const double px = ax + d1x * s, py = ay + d1y * s;
  const double qx = cx + d2x * t, qy = cy + d2y * t;
  return dist2_2d(px - qx, py - qy);
}

bool segment_intersects_box_2d(double ax, double ay, double bx, double by, double lx, double ly,
                               double hx, double hy, bool strict) {
  double t0 = 0.0, t1 = 1.0;
  const double p[2] = {ax, ay};
  const double d[2] = {bx - ax, by - ay};
  const double lo[2] = {lx, ly};
  const double hi[2] = {hx, hy};
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] == 0.0) {
      if (strict ? (p[axis] <= lo[axis] || p[axis] >= hi[axis])
                 : (p[axis] < lo[axis] || p[axis] > hi[axis])) {
        return false;
      }
    } else {
      double ta = (lo[axis] - p[axis]) / d[axis];
      double tb = (hi[axis] - p[axis]) / d[axis];
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      if (strict ? t0 >= t1 : t0 > t1) return false;
    }
  }
  return true;
}

double dist2_segment_box_2d(double ax, double ay, double bx, double by, double lx, double ly,
                            double hx, double hy) {
  if (segment_intersects_box_2d(ax, ay, bx, by, lx, ly, hx, hy, /*strict=*/false)) return 0.0;
  const double d2a = dist2_segment_segment_2d(ax, ay, bx, by, lx, ly, hx, ly);
  const double d2b = dist2_segment_segment_2d(ax, ay, bx, by, hx, ly, hx, hy);
  const double d2c = dist2_segment_segment_2d(ax, ay, bx, by, hx, hy, lx, hy);
  const double d2d = dist2_segment_segment_2d(ax, ay, bx, by, lx, hy, lx, ly);
  return std::min(std::min(d2a, d2b), std::min(d2c, d2d));
}

}  // namespace fcit
