#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "ppg/core/error.hpp"
#include "ppg/core/geometry.hpp"

namespace ppg {

struct RigidTransform2D {
  double angle = 0;  // rad
  double tx = 0, ty = 0;

  Vec2 apply(Vec2 p) const {
    double c = std::cos(angle), s = std::sin(angle);
    return Vec2{c * p.x - s * p.y + tx, s * p.x + c * p.y + ty};
  }

  RigidTransform2D inverse() const {
    double c = std::cos(angle), s = std::sin(angle);
    return RigidTransform2D{-angle, -(c * tx + s * ty), -(-s * tx + c * ty)};
  }
};

// Least-squares rigid fit of corresponding point sets (rotation + translation
// minimizing mean squared distance), closed form via the 2D cross-covariance.
inline RigidTransform2D estimate_rigid_2d(std::span<const Vec2> src, std::span<const Vec2> dst,
                                          std::span<const double> weights = {}) {
  if (src.size() != dst.size())
    throw DegenerateInputError("estimate_rigid_2d: point count mismatch");
  if (src.size() < 2) throw DegenerateInputError("estimate_rigid_2d: need at least 2 points");

  auto w_at = [&](std::size_t i) { return weights.empty() ? 1.0 : weights[i]; };
  double wsum = 0, sx = 0, sy = 0, dx = 0, dy = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    double w = w_at(i);
    wsum += w;
    sx += w * src[i].x;
    sy += w * src[i].y;
    dx += w * dst[i].x;
    dy += w * dst[i].y;
  }
  if (wsum <= 0) throw DegenerateInputError("estimate_rigid_2d: nonpositive total weight");
  sx /= wsum;
  sy /= wsum;
  dx /= wsum;
  dy /= wsum;

  // cross-covariance terms of centered points
  double a = 0;  // sum w * (s . d)
  double b = 0;  // sum w * (s x d)
  double spread = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    double w = w_at(i);
    double ux = src[i].x - sx, uy = src[i].y - sy;
    double vx = dst[i].x - dx, vy = dst[i].y - dy;
    a += w * (ux * vx + uy * vy);
    b += w * (ux * vy - uy * vx);
    spread += w * (ux * ux + uy * uy);
  }
  if (spread < 1e-18) throw DegenerateInputError("estimate_rigid_2d: all points coincident");

  RigidTransform2D t;
  t.angle = std::atan2(b, a);
  double c = std::cos(t.angle), s = std::sin(t.angle);
  t.tx = dx - (c * sx - s * sy);
  t.ty = dy - (s * sx + c * sy);
  return t;
}

}  // namespace ppg
