#pragma once

#include "ppg/core/error.hpp"
#include "ppg/core/grid.hpp"

namespace ppg {

// Cumulative revealed space C_t in the workspace frame. Grows monotonically
// within an episode via unite().
struct CoverageMap {
  BoolGrid revealed;

  CoverageMap() = default;
  explicit CoverageMap(int h, int w) : revealed(h, w, 0) {}
  explicit CoverageMap(BoolGrid g) : revealed(std::move(g)) {}

  void unite(const BoolGrid& mask) {
    if (!revealed.same_shape(mask)) throw DimensionError("CoverageMap::unite: shape mismatch");
    for (std::size_t i = 0; i < revealed.data.size(); ++i)
      revealed.data[i] = revealed.data[i] || mask.data[i];
  }

  bool covers(const CoverageMap& earlier) const {
    if (!revealed.same_shape(earlier.revealed)) return false;
    for (std::size_t i = 0; i < revealed.data.size(); ++i)
      if (earlier.revealed.data[i] && !revealed.data[i]) return false;
    return true;
  }

  int area() const { return count_true(revealed); }
};

// Cells of `candidate` not yet covered: candidate AND NOT coverage.
inline BoolGrid mask_new_space(const BoolGrid& candidate, const CoverageMap& coverage) {
  if (!candidate.same_shape(coverage.revealed))
    throw DimensionError("mask_new_space: shape mismatch");
  BoolGrid out(candidate.height, candidate.width, 0);
  for (std::size_t i = 0; i < candidate.data.size(); ++i)
    out.data[i] = candidate.data[i] && !coverage.revealed.data[i];
  return out;
}

}  // namespace ppg
