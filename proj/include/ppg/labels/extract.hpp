#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ppg/core/error.hpp"
#include "ppg/core/grid.hpp"
#include "ppg/labels/rigid.hpp"
#include "ppg/sim/render.hpp"

namespace ppg {

enum class RevealSource : std::uint8_t {
  VineColor = 0,
  Vine5cm = 1,
  DracaenaAligned = 2,
  Oracle = 3,
};

enum class VineLabelRule : std::uint8_t { BoardColor = 0, Height5cm = 1 };

// Revealed-space label recovered from a pair of observations.
struct RevealMask {
  BoolGrid revealed;
  RevealSource source = RevealSource::VineColor;
  bool degenerate = false;  // set when alignment found no plant pixels
};

struct VineLabelConfig {
  Rgb board_color{150, 110, 70};
  double color_tolerance = 30.0;  // Euclidean RGB distance
  double height_drop = 5.0;       // cm, for the height rule
};

namespace detail {

inline double rgb_dist(Rgb a, Rgb b) {
  double dr = a.r - b.r, dg = a.g - b.g, db = a.b - b.b;
  return std::sqrt(dr * dr + dg * dg + db * db);
}

inline float bilinear(const FloatGrid& g, double x, double y, bool& inside) {
  // samples are cell centers (ix + 0.5, iy + 0.5)
  double fx = x - 0.5, fy = y - 0.5;
  int x0 = static_cast<int>(std::floor(fx)), y0 = static_cast<int>(std::floor(fy));
  if (x0 < 0 || y0 < 0 || x0 + 1 >= g.width || y0 + 1 >= g.height) {
    inside = false;
    return 0.0f;
  }
  inside = true;
  double ax = fx - x0, ay = fy - y0;
  double v00 = g.at(y0, x0), v01 = g.at(y0, x0 + 1);
  double v10 = g.at(y0 + 1, x0), v11 = g.at(y0 + 1, x0 + 1);
  return static_cast<float>((1 - ay) * ((1 - ax) * v00 + ax * v01) +
                            ay * ((1 - ax) * v10 + ax * v11));
}

// Morphological opening with a 2x2 window: removes the one-cell-wide seams
// that sub-cell resampling leaves along leaf edges.
inline BoolGrid open_2x2(const BoolGrid& m) {
  BoolGrid er(m.height, m.width, 0);
  for (int y = 0; y + 1 < m.height; ++y)
    for (int x = 0; x + 1 < m.width; ++x)
      er.at(y, x) = m.at(y, x) && m.at(y, x + 1) && m.at(y + 1, x) && m.at(y + 1, x + 1);
  BoolGrid out(m.height, m.width, 0);
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x) {
      bool v = false;
      for (int dy = -1; dy <= 0; ++dy)
        for (int dx = -1; dx <= 0; ++dx) {
          int yy = y + dy, xx = x + dx;
          if (yy >= 0 && xx >= 0) v = v || er.at(yy, xx);
        }
      out.at(y, x) = v;
    }
  return out;
}

}  // namespace detail

// Vine labels from observation pairs. BoardColor: the board is visible after
// but was not before. Height5cm: the surface height dropped by at least
// height_drop. Invalid cells in either observation never get marked.
inline RevealMask extract_vine(const Observation& before, const Observation& after,
                               VineLabelRule rule, const VineLabelConfig& cfg = {}) {
  if (!before.color.same_shape(after.color) || !before.valid.same_shape(after.valid))
    throw DimensionError("extract_vine: shape mismatch");
  RevealMask out;
  out.source = rule == VineLabelRule::BoardColor ? RevealSource::VineColor : RevealSource::Vine5cm;
  out.revealed = BoolGrid(before.color.height, before.color.width, 0);
  for (int y = 0; y < before.color.height; ++y)
    for (int x = 0; x < before.color.width; ++x) {
      if (!before.valid.at(y, x) || !after.valid.at(y, x)) continue;
      if (rule == VineLabelRule::BoardColor) {
        bool bare_after = detail::rgb_dist(after.color.at(y, x), cfg.board_color) <= cfg.color_tolerance;
        bool bare_before = detail::rgb_dist(before.color.at(y, x), cfg.board_color) <= cfg.color_tolerance;
        out.revealed.at(y, x) = bare_after && !bare_before;
      } else {
        out.revealed.at(y, x) = (before.height.at(y, x) - after.height.at(y, x)) >= cfg.height_drop;
      }
    }
  return out;
}

// Whole-plant rigid motion between two height fields: translation from
// height-weighted centroids, rotation about the before-centroid by a bounded
// search over the height-field mismatch (the radial leaf layout makes
// covariance principal axes too ill-conditioned to use for the angle).
struct PlantMotion {
  bool found = false;
  double angle = 0;
  double cx = 0, cy = 0;  // rotation pivot (before centroid)
  double tx = 0, ty = 0;  // centroid translation

  Vec2 map(double x, double y) const {
    double c = std::cos(angle), s = std::sin(angle);
    double rx = x - cx, ry = y - cy;
    return Vec2{cx + c * rx - s * ry + tx, cy + s * rx + c * ry + ty};
  }
};

inline PlantMotion estimate_plant_motion(const FloatGrid& before_h, const FloatGrid& after_h,
                                         const BoolGrid& valid, double min_height = 1.0) {
  PlantMotion m;
  double wb = 0, bx = 0, by = 0, wa = 0, ax = 0, ay = 0;
  for (int y = 0; y < before_h.height; ++y)
    for (int x = 0; x < before_h.width; ++x) {
      if (!valid.at(y, x)) continue;
      double hb = before_h.at(y, x), ha = after_h.at(y, x);
      if (hb > min_height) {
        wb += hb;
        bx += hb * (x + 0.5);
        by += hb * (y + 0.5);
      }
      if (ha > min_height) {
        wa += ha;
        ax += ha * (x + 0.5);
        ay += ha * (y + 0.5);
      }
    }
  if (wb <= 0 || wa <= 0) return m;
  m.found = true;
  m.cx = bx / wb;
  m.cy = by / wb;
  m.tx = ax / wa - m.cx;
  m.ty = ay / wa - m.cy;

  auto score = [&](double angle) {
    PlantMotion probe = m;
    probe.angle = angle;
    double ssd = 0;
    for (int y = 0; y < before_h.height; ++y)
      for (int x = 0; x < before_h.width; ++x) {
        if (!valid.at(y, x)) continue;
        double hb = before_h.at(y, x);
        if (hb <= min_height) continue;
        Vec2 q = probe.map(x + 0.5, y + 0.5);
        bool inside = false;
        double ha = detail::bilinear(after_h, q.x, q.y, inside);
        if (!inside) continue;
        double d = hb - ha;
        ssd += d * d;
      }
    return ssd;
  };

  // coarse grid then one quadratic refinement; wobble is a few degrees at most
  const double step = 0.004, range = 0.09;
  double best_a = 0, best_s = 1e300;
  for (double a = -range; a <= range + 1e-12; a += step) {
    double s = score(a);
    if (s < best_s) {
      best_s = s;
      best_a = a;
    }
  }
  double s0 = score(best_a - step), s2 = score(best_a + step);
  double denom = s0 - 2 * best_s + s2;
  if (denom > 1e-12) best_a += 0.5 * step * (s0 - s2) / denom;
  m.angle = best_a;
  return m;
}

// Dracaena labels: align the after observation onto the before frame with the
// estimated whole-plant motion, then mark aligned height decreases of at
// least tau. A small opening pass drops single-cell resampling seams.
inline RevealMask extract_dracaena(const Observation& before, const Observation& after,
                                   double tau = 3.0) {
  if (!before.height.same_shape(after.height))
    throw DimensionError("extract_dracaena: shape mismatch");
  RevealMask out;
  out.source = RevealSource::DracaenaAligned;
  out.revealed = BoolGrid(before.height.height, before.height.width, 0);

  BoolGrid valid(before.valid.height, before.valid.width, 0);
  for (std::size_t i = 0; i < valid.data.size(); ++i)
    valid.data[i] = before.valid.data[i] && after.valid.data[i];

  PlantMotion motion = estimate_plant_motion(before.height, after.height, valid);
  if (!motion.found) {
    out.degenerate = true;
    return out;
  }

  BoolGrid raw(before.height.height, before.height.width, 0);
  for (int y = 0; y < raw.height; ++y)
    for (int x = 0; x < raw.width; ++x) {
      if (!valid.at(y, x)) continue;
      Vec2 q = motion.map(x + 0.5, y + 0.5);
      bool inside = false;
      double aligned = detail::bilinear(after.height, q.x, q.y, inside);
      if (!inside) continue;
      raw.at(y, x) = (before.height.at(y, x) - aligned) >= tau;
    }
  out.revealed = detail::open_2x2(raw);
  for (std::size_t i = 0; i < out.revealed.data.size(); ++i)
    if (!valid.data[i]) out.revealed.data[i] = 0;
  return out;
}

// Cells where the surface behind the plant is visible (episode coverage
// initialization): bare board by color for vines, bare ground by height for
// the dracaena.
inline BoolGrid visible_space(const Observation& obs, PlantKind kind,
                              const VineLabelConfig& cfg = {}) {
  BoolGrid out(obs.color.height, obs.color.width, 0);
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x) {
      if (!obs.valid.at(y, x)) continue;
      if (kind == PlantKind::Vine)
        out.at(y, x) = detail::rgb_dist(obs.color.at(y, x), cfg.board_color) <= cfg.color_tolerance;
      else
        out.at(y, x) = obs.height.at(y, x) <= 0.5f;
    }
  return out;
}

}  // namespace ppg
