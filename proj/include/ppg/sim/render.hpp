#pragma once

#include <algorithm>
#include <cmath>

#include "ppg/sim/plant.hpp"

namespace ppg {

// Per-cell color + height-above-surface view of the plant, workspace frame.
// Cells with valid == 0 carry sentinel values (black, height 0) and are
// excluded from every loss and metric downstream.
struct Observation {
  ColorGrid color;
  FloatGrid height;
  BoolGrid valid;
};

namespace detail {

// Columns covered by a strip of `width` cm centered at x: cell centers within
// half-open [x - w/2, x + w/2).
inline void strip_columns(double x, int width_cells, int board_w, int& c0, int& c1) {
  double half = width_cells / 2.0;
  c0 = std::max(0, static_cast<int>(std::ceil(x - half - 0.5)));
  c1 = std::min(board_w - 1, static_cast<int>(std::ceil(x + half - 0.5)) - 1);
}

struct LeafFrame {
  double ox, oy;    // wobbled plant center
  double dx, dy;    // wobbled leaf direction
  double px, py;    // perpendicular
};

inline LeafFrame leaf_frame(const DracaenaState& st, const DracaenaLeaf& lf) {
  double ang = lf.world_angle() + st.wobble_rot;
  LeafFrame f;
  f.ox = st.center_x + st.wobble_tx;
  f.oy = st.center_y + st.wobble_ty;
  f.dx = std::cos(ang);
  f.dy = std::sin(ang);
  f.px = -f.dy;
  f.py = f.dx;
  return f;
}

// Height of the leaf surface at a cell center, or -1 if the cell is outside
// the leaf strip.
inline double leaf_height_at(const DracaenaState& st, const DracaenaLeaf& lf, const LeafFrame& f,
                             double cx, double cy) {
  double rx = cx - f.ox, ry = cy - f.oy;
  double u = rx * f.dx + ry * f.dy;
  double v = rx * f.px + ry * f.py;
  double half = lf.width_cells / 2.0;
  if (u < lf.inner_radius || u >= lf.inner_radius + lf.length) return -1.0;
  if (v < -half || v >= half) return -1.0;
  return std::max(0.2, st.band_height[lf.z_band] - lf.droop * u);
}

inline Rgb add_noise(Rgb base, Rgb n) {
  return Rgb{std::clamp(base.r + n.r, 0.0f, 255.0f), std::clamp(base.g + n.g, 0.0f, 255.0f),
             std::clamp(base.b + n.b, 0.0f, 255.0f)};
}

}  // namespace detail

// Fronto-parallel board render: the deepest (front-most) strand wins each
// cell; height is its distance from the board, 0 on bare board.
inline Observation render(const VineState& st) {
  Observation obs;
  obs.color = ColorGrid(st.board_h, st.board_w, st.board_color);
  obs.height = FloatGrid(st.board_h, st.board_w, 0.0f);
  obs.valid = BoolGrid(st.board_h, st.board_w, 1);
  for (const auto& s : st.strands) {
    for (int y = 0; y < st.board_h; ++y) {
      int c0, c1;
      detail::strip_columns(s.anchor_x + s.offset(y), s.width_cells, st.board_w, c0, c1);
      for (int x = c0; x <= c1; ++x) {
        if (s.depth > obs.height.at(y, x)) {
          obs.height.at(y, x) = static_cast<float>(s.depth);
          obs.color.at(y, x) = s.color;
        }
      }
    }
  }
  for (int y = 0; y < st.board_h; ++y)
    for (int x = 0; x < st.board_w; ++x)
      obs.color.at(y, x) = detail::add_noise(obs.color.at(y, x), st.noise.at(y, x));
  return obs;
}

// Top-down render: the tallest leaf surface wins each cell; height 0 on bare
// ground. Pass override_identity_wobble to render the plant in its unwobbled
// pose (used by the reveal oracle).
inline Observation render(const DracaenaState& st) {
  Observation obs;
  obs.color = ColorGrid(st.board_h, st.board_w, st.ground_color);
  obs.height = FloatGrid(st.board_h, st.board_w, 0.0f);
  obs.valid = BoolGrid(st.board_h, st.board_w, 1);
  for (const auto& lf : st.leaves) {
    auto f = detail::leaf_frame(st, lf);
    // bounding box of the strip, padded a cell
    double u1 = lf.inner_radius + lf.length, half = lf.width_cells / 2.0 + 1.0;
    double xs[4] = {f.ox + lf.inner_radius * f.dx - half * std::abs(f.px),
                    f.ox + u1 * f.dx - half * std::abs(f.px),
                    f.ox + lf.inner_radius * f.dx + half * std::abs(f.px),
                    f.ox + u1 * f.dx + half * std::abs(f.px)};
    double ys[4] = {f.oy + lf.inner_radius * f.dy - half * std::abs(f.py),
                    f.oy + u1 * f.dy - half * std::abs(f.py),
                    f.oy + lf.inner_radius * f.dy + half * std::abs(f.py),
                    f.oy + u1 * f.dy + half * std::abs(f.py)};
    int x0 = std::max(0, static_cast<int>(std::floor(*std::min_element(xs, xs + 4))) - 1);
    int x1 = std::min(st.board_w - 1, static_cast<int>(std::ceil(*std::max_element(xs, xs + 4))) + 1);
    int y0 = std::max(0, static_cast<int>(std::floor(*std::min_element(ys, ys + 4))) - 1);
    int y1 = std::min(st.board_h - 1, static_cast<int>(std::ceil(*std::max_element(ys, ys + 4))) + 1);
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) {
        double h = detail::leaf_height_at(st, lf, f, x + 0.5, y + 0.5);
        if (h > obs.height.at(y, x)) {
          obs.height.at(y, x) = static_cast<float>(h);
          obs.color.at(y, x) = lf.color;
        }
      }
  }
  for (int y = 0; y < st.board_h; ++y)
    for (int x = 0; x < st.board_w; ++x)
      obs.color.at(y, x) = detail::add_noise(obs.color.at(y, x), st.noise.at(y, x));
  return obs;
}

inline Observation render(const PlantState& st) {
  if (const auto* v = std::get_if<VineState>(&st)) return render(*v);
  return render(std::get<DracaenaState>(st));
}

// Strand occupancy independent of color noise (reveal oracle support).
inline BoolGrid occupancy(const VineState& st) {
  BoolGrid occ(st.board_h, st.board_w, 0);
  for (const auto& s : st.strands)
    for (int y = 0; y < st.board_h; ++y) {
      int c0, c1;
      detail::strip_columns(s.anchor_x + s.offset(y), s.width_cells, st.board_w, c0, c1);
      for (int x = c0; x <= c1; ++x) occ.at(y, x) = 1;
    }
  return occ;
}

// Height field rendered in a caller-chosen rigid pose (reveal oracle renders
// before and after in the same pose so whole-plant wobble cancels).
inline FloatGrid height_map_posed(const DracaenaState& st, double rot, double tx, double ty) {
  DracaenaState posed = st;
  posed.wobble_rot = rot;
  posed.wobble_tx = tx;
  posed.wobble_ty = ty;
  return render(posed).height;
}

}  // namespace ppg
