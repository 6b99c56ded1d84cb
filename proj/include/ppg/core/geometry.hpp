#pragma once

#include <algorithm>
#include <cmath>

#include "ppg/core/grid.hpp"

namespace ppg {

struct Vec2 {
  double x = 0, y = 0;
};

inline double dist_point_segment(double px, double py, double ax, double ay, double bx,
                                 double by) {
  double dx = bx - ax, dy = by - ay;
  double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  double qx = ax + t * dx - px, qy = ay + t * dy - py;
  return std::sqrt(qx * qx + qy * qy);
}

// Cells whose centers lie within `radius` of the segment a-b.
inline BoolGrid rasterize_capsule(int h, int w, double ax, double ay, double bx, double by,
                                  double radius) {
  BoolGrid g(h, w, 0);
  int x0 = std::max(0, static_cast<int>(std::floor(std::min(ax, bx) - radius)) - 1);
  int x1 = std::min(w - 1, static_cast<int>(std::ceil(std::max(ax, bx) + radius)) + 1);
  int y0 = std::max(0, static_cast<int>(std::floor(std::min(ay, by) - radius)) - 1);
  int y1 = std::min(h - 1, static_cast<int>(std::ceil(std::max(ay, by) + radius)) + 1);
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x)
      if (dist_point_segment(x + 0.5, y + 0.5, ax, ay, bx, by) <= radius) g.at(y, x) = 1;
  return g;
}

}  // namespace ppg
