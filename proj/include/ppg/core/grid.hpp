#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ppg/core/error.hpp"

namespace ppg {

// Row-major 2D grid over the workspace. Rows index y (downward for the vine
// board image, camera-down for the top view), columns index x. One cell is
// one square centimeter, so areas in cells equal areas in cm^2.
template <typename V>
struct Grid2D {
  int height = 0;
  int width = 0;
  std::vector<V> data;

  Grid2D() = default;
  Grid2D(int h, int w, V fill = V{}) : height(h), width(w), data(static_cast<std::size_t>(h) * w, fill) {
    if (h < 1 || w < 1) throw DimensionError("Grid2D: height and width must be >= 1");
  }

  V& at(int y, int x) { return data[static_cast<std::size_t>(y) * width + x]; }
  const V& at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x]; }

  bool contains(int y, int x) const { return y >= 0 && y < height && x >= 0 && x < width; }

  std::size_t size() const { return data.size(); }

  bool same_shape(const Grid2D& other) const {
    return height == other.height && width == other.width;
  }

  bool operator==(const Grid2D& other) const {
    return height == other.height && width == other.width && data == other.data;
  }
};

using BoolGrid = Grid2D<std::uint8_t>;  // 0/1
using FloatGrid = Grid2D<float>;

struct Rgb {
  float r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

using ColorGrid = Grid2D<Rgb>;

inline int count_true(const BoolGrid& g) {
  int n = 0;
  for (auto v : g.data) n += (v != 0);
  return n;
}

inline BoolGrid flip_horizontal(const BoolGrid& g) {
  BoolGrid out(g.height, g.width);
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) out.at(y, x) = g.at(y, g.width - 1 - x);
  return out;
}

template <typename V>
Grid2D<V> flip_horizontal(const Grid2D<V>& g) {
  Grid2D<V> out(g.height, g.width);
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) out.at(y, x) = g.at(y, g.width - 1 - x);
  return out;
}

inline double iou(const BoolGrid& a, const BoolGrid& b) {
  if (!a.same_shape(b)) throw DimensionError("iou: shape mismatch");
  int inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    bool va = a.data[i] != 0, vb = b.data[i] != 0;
    inter += (va && vb);
    uni += (va || vb);
  }
  return uni == 0 ? 1.0 : static_cast<double>(inter) / uni;
}

}  // namespace ppg
