#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ppg/core/error.hpp"
#include "ppg/core/grid.hpp"

namespace ppg {

enum class PlantKind : std::uint8_t { Vine = 0, Dracaena = 1 };

struct Rect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // cm, half-open on construction, closed for clipping ties
  bool contains(double x, double y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }
};

// One planar push: start location in cm, discrete direction and height level,
// push length in cm after clipping to the reachable region.
struct ActionSpec {
  double x = 0;
  double y = 0;
  int dir_index = 0;
  int z_index = 0;
  double length = 0;

  bool operator==(const ActionSpec&) const = default;
};

// Discretized push-action space over a rectangular reachable region.
// Start centers sit on a 2 cm pitch grid; directions and push heights are
// small fixed lists. Board-image coordinates: x right, y down. Angles are
// measured from +x, counterclockwise as drawn (so push motion for angle a is
// (cos a, -sin a) in row/column space).
struct ActionSpace {
  PlantKind kind = PlantKind::Vine;
  int board_h = 0, board_w = 0;  // workspace cells
  Rect reach;                    // continuous reachable region, cm
  BoolGrid reachable;            // per-cell legality of start cells
  std::vector<double> start_xs;  // start-center coordinates, ascending
  std::vector<double> start_ys;
  std::optional<Rect> exclusion;  // starts are never placed inside

  std::vector<double> angles;               // radians
  std::vector<std::array<double, 2>> push_units;  // motion in image coords: (cos a, -sin a)
  std::vector<std::array<double, 2>> feat_units;  // endpoint features: (cos a, sin a)
  std::vector<int> mirror_index;            // direction index under a -> pi - a
  std::vector<double> z_levels;             // cm
  double push_length = 15.0;

  bool start_allowed(double x, double y) const {
    if (!reach.contains(x, y)) return false;
    if (exclusion && exclusion->contains(x, y)) return false;
    return true;
  }

  bool is_start_center(double x, double y) const {
    auto on_pitch = [](double v, const std::vector<double>& centers) {
      if (centers.empty()) return false;
      double lo = centers.front(), hi = centers.back();
      if (v < lo - 1e-9 || v > hi + 1e-9) return false;
      double k = (v - lo) / 2.0;
      return std::abs(k - std::round(k)) < 1e-9;
    };
    return on_pitch(x, start_xs) && on_pitch(y, start_ys) && start_allowed(x, y);
  }

  // Nearest start-center coordinate along one axis; ties toward the lower value.
  static double snap_axis(double v, const std::vector<double>& centers) {
    double lo = centers.front(), hi = centers.back();
    double clamped = std::min(std::max(v, lo), hi);
    double k = (clamped - lo) / 2.0;
    double down = std::floor(k), up = std::ceil(k);
    double cd = lo + 2.0 * down, cu = lo + 2.0 * up;
    return (clamped - cd <= cu - clamped) ? cd : cu;
  }

  // Nearest direction index by absolute (circular for the full-circle set)
  // angle distance; ties toward the lower index.
  int snap_direction(double theta) const {
    bool full_circle = angles.size() > 1 && angles.back() > 3.2;  // spans past pi
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      double d = std::abs(theta - angles[i]);
      if (full_circle) {
        double two_pi = 6.283185307179586476925286766559;
        d = std::fmod(std::abs(theta - angles[i]), two_pi);
        d = std::min(d, two_pi - d);
      }
      if (d < best - 1e-12) {
        best = d;
        best_i = static_cast<int>(i);
      }
    }
    return best_i;
  }

  int snap_z(double z) const {
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (std::size_t i = 0; i < z_levels.size(); ++i) {
      double d = std::abs(z - z_levels[i]);
      if (d < best - 1e-12) {
        best = d;
        best_i = static_cast<int>(i);
      }
    }
    return best_i;
  }

  std::size_t num_starts() const { return start_xs.size() * start_ys.size(); }
};

namespace detail {

inline void fill_reachable(ActionSpace& s) {
  s.reachable = BoolGrid(s.board_h, s.board_w, 0);
  for (int y = 0; y < s.board_h; ++y)
    for (int x = 0; x < s.board_w; ++x) {
      double cx = x + 0.5, cy = y + 0.5;
      s.reachable.at(y, x) = s.reach.contains(cx, cy) ? 1 : 0;
    }
}

inline std::vector<double> pitch_centers(double lo, double hi) {
  std::vector<double> c;
  for (double v = lo + 1.0; v < hi; v += 2.0) c.push_back(v);
  return c;
}

}  // namespace detail

// 80x80 cm board with a centered 40x40 cm reachable region (20x20 start grid).
// Seven push directions from 0 to pi; a single push height.
inline ActionSpace make_vine_space() {
  ActionSpace s;
  s.kind = PlantKind::Vine;
  s.board_h = 80;
  s.board_w = 80;
  s.reach = Rect{20.0, 20.0, 60.0, 60.0};
  s.start_xs = detail::pitch_centers(20.0, 60.0);
  s.start_ys = detail::pitch_centers(20.0, 60.0);
  detail::fill_reachable(s);

  const double pi = 3.14159265358979323846;
  const double c30 = std::sqrt(3.0) / 2.0;
  // cos/sin at k*pi/6, written so mirrored entries negate exactly
  const double cosv[7] = {1.0, c30, 0.5, 0.0, -0.5, -c30, -1.0};
  const double sinv[7] = {0.0, 0.5, c30, 1.0, c30, 0.5, 0.0};
  for (int k = 0; k < 7; ++k) {
    s.angles.push_back(k * pi / 6.0);
    s.push_units.push_back({cosv[k], -sinv[k]});
    s.feat_units.push_back({cosv[k], sinv[k]});
    s.mirror_index.push_back(6 - k);
  }
  s.z_levels = {6.0};
  s.push_length = 15.0;
  return s;
}

// 90x90 cm top-down workspace, 58x54 cm reachable region (29x27 start grid)
// minus a centered exclusion rectangle. Eight directions over the full
// circle; three push heights (cm above the ground).
inline ActionSpace make_dracaena_space() {
  ActionSpace s;
  s.kind = PlantKind::Dracaena;
  s.board_h = 90;
  s.board_w = 90;
  s.reach = Rect{16.0, 18.0, 74.0, 72.0};
  s.exclusion = Rect{34.0, 34.0, 56.0, 56.0};
  s.start_xs = detail::pitch_centers(16.0, 74.0);
  s.start_ys = detail::pitch_centers(18.0, 72.0);
  detail::fill_reachable(s);
  for (int y = 0; y < s.board_h; ++y)
    for (int x = 0; x < s.board_w; ++x)
      if (s.exclusion->contains(x + 0.5, y + 0.5)) s.reachable.at(y, x) = 0;

  const double pi = 3.14159265358979323846;
  const double c45 = std::sqrt(2.0) / 2.0;
  const double cosv[8] = {1.0, c45, 0.0, -c45, -1.0, -c45, 0.0, c45};
  const double sinv[8] = {0.0, c45, 1.0, c45, 0.0, -c45, -1.0, -c45};
  for (int k = 0; k < 8; ++k) {
    s.angles.push_back(k * pi / 4.0);
    s.push_units.push_back({cosv[k], -sinv[k]});
    s.feat_units.push_back({cosv[k], sinv[k]});
  }
  s.mirror_index = {4, 3, 2, 1, 0, 7, 6, 5};
  s.z_levels = {32.5, 27.5, 22.5};
  s.push_length = 15.0;
  return s;
}

inline ActionSpace make_space(PlantKind kind) {
  return kind == PlantKind::Vine ? make_vine_space() : make_dracaena_space();
}

// Longest push <= push_length from (x, y) along the chosen direction that
// keeps the swept path inside the closed reachable rectangle. An endpoint
// exactly on the boundary counts as feasible; zero feasible length does not.
inline ActionSpec clip_action(const ActionSpace& space, double x, double y, int dir_index,
                              int z_index = 0) {
  if (dir_index < 0 || dir_index >= static_cast<int>(space.angles.size()))
    throw InfeasibleActionError("clip_action: bad direction index");
  if (z_index < 0 || z_index >= static_cast<int>(space.z_levels.size()))
    throw InfeasibleActionError("clip_action: bad z index");
  const Rect& r = space.reach;
  bool inside_closed = x >= r.x0 && x <= r.x1 && y >= r.y0 && y <= r.y1;
  if (!inside_closed) throw InfeasibleActionError("clip_action: start outside reachable region");

  auto [ux, uy] = space.push_units[dir_index];
  double t_exit = std::numeric_limits<double>::infinity();
  if (ux > 0) t_exit = std::min(t_exit, (r.x1 - x) / ux);
  if (ux < 0) t_exit = std::min(t_exit, (r.x0 - x) / ux);
  if (uy > 0) t_exit = std::min(t_exit, (r.y1 - y) / uy);
  if (uy < 0) t_exit = std::min(t_exit, (r.y0 - y) / uy);

  double d = std::min(space.push_length, t_exit);
  if (d <= 0.0) throw InfeasibleActionError("clip_action: no positive push length feasible");
  return ActionSpec{x, y, dir_index, z_index, d};
}

// Reflect an action about the vertical line x = axis_x. The direction list is
// closed under a -> pi - a for both plant kinds, so only the start location
// can fail to map onto a legal start center.
inline ActionSpec mirror_action(const ActionSpace& space, const ActionSpec& a, double axis_x) {
  ActionSpec m = a;
  m.x = 2.0 * axis_x - a.x;
  m.dir_index = space.mirror_index[a.dir_index];
  if (!space.is_start_center(m.x, m.y))
    throw InfeasibleActionError("mirror_action: mirrored start is not a legal start center");
  return m;
}

}  // namespace ppg
