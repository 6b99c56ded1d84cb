#pragma once

#include "ppg/core/error.hpp"
#include "ppg/sim/render.hpp"

namespace ppg {

// Ground-truth revealed space between two simulator states.
//
// Vines: a cell counts iff some strand covered it before and the board is
// bare there after. Dracaena: both states are rendered in the before pose so
// whole-plant wobble cancels, then a height decrease of at least tau_reveal
// counts.
inline BoolGrid truth_reveal(const PlantState& before, const PlantState& after) {
  if (plant_kind(before) != plant_kind(after))
    throw DimensionError("truth_reveal: mismatched plant kinds");

  if (const auto* vb = std::get_if<VineState>(&before)) {
    const auto& va = std::get<VineState>(after);
    BoolGrid occ_b = occupancy(*vb), occ_a = occupancy(va);
    BoolGrid out(vb->board_h, vb->board_w, 0);
    for (std::size_t i = 0; i < out.data.size(); ++i)
      out.data[i] = occ_b.data[i] && !occ_a.data[i];
    return out;
  }

  const auto& db = std::get<DracaenaState>(before);
  const auto& da = std::get<DracaenaState>(after);
  FloatGrid hb = height_map_posed(db, db.wobble_rot, db.wobble_tx, db.wobble_ty);
  FloatGrid ha = height_map_posed(da, db.wobble_rot, db.wobble_tx, db.wobble_ty);
  BoolGrid out(db.board_h, db.board_w, 0);
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] = (hb.data[i] - ha.data[i]) >= db.tau_reveal;
  return out;
}

}  // namespace ppg
