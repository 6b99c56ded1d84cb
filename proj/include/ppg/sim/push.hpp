#pragma once

#include <cmath>
#include <vector>

#include "ppg/core/action.hpp"
#include "ppg/core/geometry.hpp"
#include "ppg/sim/plant.hpp"

namespace ppg {

namespace detail {

struct PushSegment {
  double ax, ay, bx, by;
};

inline PushSegment push_segment(const ActionSpace& space, const ActionSpec& a) {
  auto [ux, uy] = space.push_units[a.dir_index];
  return PushSegment{a.x, a.y, a.x + a.length * ux, a.y + a.length * uy};
}

// Sign of the horizontal push component; exactly 0 for vertical pushes.
inline double lateral_sign(double ux) { return ux > 0 ? 1.0 : (ux < 0 ? -1.0 : 0.0); }

inline VineState push_vines(const VineState& st, const ActionSpace& space, const ActionSpec& a,
                            Rng& rng) {
  PushSegment seg = push_segment(space, a);
  double sign = lateral_sign(space.push_units[a.dir_index][0]);

  // Pass 1: contact rows and penetration depths from the pre-push geometry.
  const int n = static_cast<int>(st.strands.size());
  std::vector<int> contact_row(n, -1);
  std::vector<double> increment(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto& s = st.strands[i];
    double reach = st.effector_radius + s.width_cells / 2.0;
    double min_dist = 1e300;
    for (int y = 0; y < st.board_h; ++y) {
      double d = dist_point_segment(s.anchor_x + s.offset(y), y + 0.5, seg.ax, seg.ay, seg.bx,
                                    seg.by);
      if (d <= reach && contact_row[i] < 0) contact_row[i] = y;
      min_dist = std::min(min_dist, d);
    }
    if (contact_row[i] >= 0) increment[i] = (reach - min_dist) * sign;
  }

  bool any_contact = false;
  for (int i = 0; i < n; ++i) any_contact |= contact_row[i] >= 0;
  if (!any_contact) return st;

  // Pass 2: entangled neighbors within 3 cm (at the mover's contact row) get
  // gamma times the mover's increment, attenuated from the same row.
  VineState out = st;
  for (int i = 0; i < n; ++i) {
    if (contact_row[i] < 0 || increment[i] == 0.0) continue;
    int cr = contact_row[i];
    const auto& mover = st.strands[i];
    for (int j = 0; j < n; ++j) {
      double coupling = (j == i) ? 1.0 : st.entangle;
      if (j != i) {
        double gap = std::abs((st.strands[j].anchor_x + st.strands[j].offset(cr)) -
                              (mover.anchor_x + mover.offset(cr)));
        if (gap > 3.0) continue;
      }
      auto& tgt = out.strands[j];
      double att = 1.0;
      for (int y = cr; y < st.board_h; ++y) {
        tgt.sway[y] += coupling * increment[i] * att;
        att *= tgt.stiffness;
      }
    }
  }

  for (auto& s : out.strands)
    for (auto& v : s.sway) v *= (1.0 - st.relaxation);

  out.noise = make_noise_grid(st.board_h, st.board_w, st.noise_amp, rng);
  return out;
}

inline DracaenaState push_dracaena(const DracaenaState& st, const ActionSpace& space,
                                   const ActionSpec& a, Rng& rng) {
  DracaenaState out = st;
  PushSegment seg = push_segment(space, a);
  auto [ux, uy] = space.push_units[a.dir_index];
  double cwx = st.center_x + st.wobble_tx, cwy = st.center_y + st.wobble_ty;

  for (std::size_t i = 0; i < st.leaves.size(); ++i) {
    const auto& lf = st.leaves[i];
    if (lf.z_band != a.z_index) continue;
    double ang = lf.world_angle() + st.wobble_rot;
    double dx = std::cos(ang), dy = std::sin(ang);
    double reach = st.effector_radius + lf.width_cells / 2.0;

    // Closest approach of the leaf centerline to the push segment, sampled
    // along the strip.
    double best = 1e300, best_u = 0;
    int steps = std::max(2, static_cast<int>(std::ceil(lf.length)));
    for (int k = 0; k <= steps; ++k) {
      double u = lf.inner_radius + lf.length * k / steps;
      double px = cwx + u * dx, py = cwy + u * dy;
      double d = dist_point_segment(px, py, seg.ax, seg.ay, seg.bx, seg.by);
      if (d < best) {
        best = d;
        best_u = u;
      }
    }
    if (best > reach) continue;

    double cx = cwx + best_u * dx, cy = cwy + best_u * dy;
    double rx = cx - cwx, ry = cy - cwy;
    double rc = std::sqrt(rx * rx + ry * ry);
    if (rc < 1e-9) continue;
    double tx = -ry / rc, ty = rx / rc;  // direction of increasing position angle
    double tangential = a.length * (ux * tx + uy * ty);
    double inc = st.deflect_gain * tangential / rc;
    out.leaves[i].deflection =
        std::clamp(lf.deflection + inc, -1.5707963267948966, 1.5707963267948966);
  }

  // Whole-plant wobble jitter on every interaction.
  out.wobble_rot = std::clamp(st.wobble_rot + rng.uniform(-0.035, 0.035), -0.061, 0.061);
  double ntx = st.wobble_tx + rng.uniform(-1.0, 1.0);
  double nty = st.wobble_ty + rng.uniform(-1.0, 1.0);
  double norm = std::sqrt(ntx * ntx + nty * nty);
  if (norm > 2.0) {
    ntx *= 2.0 / norm;
    nty *= 2.0 / norm;
  }
  out.wobble_tx = ntx;
  out.wobble_ty = nty;
  out.noise = make_noise_grid(st.board_h, st.board_w, st.noise_amp, rng);
  return out;
}

}  // namespace detail

// Applies one push. Pure in (state, action, rng identity): the successor is
// reproducible bit for bit. A vine push that touches nothing returns the
// state unchanged; a dracaena push always jitters the whole-plant pose.
inline PlantState apply_push(const PlantState& st, const ActionSpace& space, const ActionSpec& a,
                             Rng rng) {
  if (!space.is_start_center(a.x, a.y) || a.length <= 0 || a.length > space.push_length + 1e-9)
    throw InfeasibleActionError("apply_push: action infeasible");
  if (const auto* v = std::get_if<VineState>(&st))
    return detail::push_vines(*v, space, a, rng);
  return detail::push_dracaena(std::get<DracaenaState>(st), space, a, rng);
}

}  // namespace ppg
