#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "ppg/core/error.hpp"
#include "ppg/sim/plant.hpp"

namespace ppg {

// Versioned little-endian plant snapshots, magic "PPGS". Used for episode
// replay and debugging dumps.
namespace snapshot {

inline constexpr std::uint32_t kVersion = 1;

namespace detail {

// This codebase only targets little-endian hosts; raw writes are fine.
template <typename T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw StorageError("snapshot: truncated stream");
  return v;
}

inline void put_vec(std::ostream& os, const std::vector<double>& v) {
  put<std::uint32_t>(os, static_cast<std::uint32_t>(v.size()));
  os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * 8));
}

inline std::vector<double> get_vec(std::istream& is) {
  auto n = get<std::uint32_t>(is);
  std::vector<double> v(n);
  is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n) * 8);
  if (!is) throw StorageError("snapshot: truncated stream");
  return v;
}

inline void put_rgb(std::ostream& os, Rgb c) {
  put(os, c.r);
  put(os, c.g);
  put(os, c.b);
}

inline Rgb get_rgb(std::istream& is) {
  Rgb c;
  c.r = get<float>(is);
  c.g = get<float>(is);
  c.b = get<float>(is);
  return c;
}

inline void put_colorgrid(std::ostream& os, const ColorGrid& g) {
  put<std::int32_t>(os, g.height);
  put<std::int32_t>(os, g.width);
  for (const auto& c : g.data) put_rgb(os, c);
}

inline ColorGrid get_colorgrid(std::istream& is) {
  int h = get<std::int32_t>(is), w = get<std::int32_t>(is);
  ColorGrid g(h, w);
  for (auto& c : g.data) c = get_rgb(is);
  return g;
}

}  // namespace detail

inline void write(std::ostream& os, const PlantState& st) {
  os.write("PPGS", 4);
  detail::put<std::uint32_t>(os, kVersion);
  detail::put<std::uint8_t>(os, static_cast<std::uint8_t>(plant_kind(st)));

  if (const auto* v = std::get_if<VineState>(&st)) {
    detail::put<std::int32_t>(os, v->board_h);
    detail::put<std::int32_t>(os, v->board_w);
    detail::put_rgb(os, v->board_color);
    detail::put(os, v->entangle);
    detail::put(os, v->relaxation);
    detail::put(os, v->effector_radius);
    detail::put(os, v->noise_amp);
    detail::put<std::uint32_t>(os, static_cast<std::uint32_t>(v->strands.size()));
    for (const auto& s : v->strands) {
      detail::put(os, s.anchor_x);
      detail::put<std::int32_t>(os, s.width_cells);
      detail::put(os, s.depth);
      detail::put(os, s.stiffness);
      detail::put_rgb(os, s.color);
      detail::put_vec(os, s.rest);
      detail::put_vec(os, s.sway);
    }
    detail::put_colorgrid(os, v->noise);
  } else {
    const auto& d = std::get<DracaenaState>(st);
    detail::put<std::int32_t>(os, d.board_h);
    detail::put<std::int32_t>(os, d.board_w);
    detail::put(os, d.center_x);
    detail::put(os, d.center_y);
    detail::put_rgb(os, d.ground_color);
    for (double h : d.band_height) detail::put(os, h);
    detail::put(os, d.wobble_rot);
    detail::put(os, d.wobble_tx);
    detail::put(os, d.wobble_ty);
    detail::put(os, d.effector_radius);
    detail::put(os, d.deflect_gain);
    detail::put(os, d.tau_reveal);
    detail::put(os, d.noise_amp);
    detail::put<std::uint32_t>(os, static_cast<std::uint32_t>(d.leaves.size()));
    for (const auto& lf : d.leaves) {
      detail::put(os, lf.base_angle);
      detail::put(os, lf.deflection);
      detail::put(os, lf.length);
      detail::put<std::int32_t>(os, lf.width_cells);
      detail::put<std::int32_t>(os, lf.z_band);
      detail::put(os, lf.droop);
      detail::put(os, lf.inner_radius);
      detail::put_rgb(os, lf.color);
    }
    detail::put_colorgrid(os, d.noise);
  }
}

inline PlantState read(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "PPGS", 4) != 0)
    throw StorageError("snapshot: bad magic");
  auto version = detail::get<std::uint32_t>(is);
  if (version != kVersion) throw StorageError("snapshot: unsupported version");
  auto kind = static_cast<PlantKind>(detail::get<std::uint8_t>(is));

  if (kind == PlantKind::Vine) {
    VineState v;
    v.board_h = detail::get<std::int32_t>(is);
    v.board_w = detail::get<std::int32_t>(is);
    v.board_color = detail::get_rgb(is);
    v.entangle = detail::get<double>(is);
    v.relaxation = detail::get<double>(is);
    v.effector_radius = detail::get<double>(is);
    v.noise_amp = detail::get<double>(is);
    auto n = detail::get<std::uint32_t>(is);
    for (std::uint32_t i = 0; i < n; ++i) {
      VineStrand s;
      s.anchor_x = detail::get<double>(is);
      s.width_cells = detail::get<std::int32_t>(is);
      s.depth = detail::get<double>(is);
      s.stiffness = detail::get<double>(is);
      s.color = detail::get_rgb(is);
      s.rest = detail::get_vec(is);
      s.sway = detail::get_vec(is);
      v.strands.push_back(std::move(s));
    }
    v.noise = detail::get_colorgrid(is);
    return v;
  }

  DracaenaState d;
  d.board_h = detail::get<std::int32_t>(is);
  d.board_w = detail::get<std::int32_t>(is);
  d.center_x = detail::get<double>(is);
  d.center_y = detail::get<double>(is);
  d.ground_color = detail::get_rgb(is);
  for (double& h : d.band_height) h = detail::get<double>(is);
  d.wobble_rot = detail::get<double>(is);
  d.wobble_tx = detail::get<double>(is);
  d.wobble_ty = detail::get<double>(is);
  d.effector_radius = detail::get<double>(is);
  d.deflect_gain = detail::get<double>(is);
  d.tau_reveal = detail::get<double>(is);
  d.noise_amp = detail::get<double>(is);
  auto n = detail::get<std::uint32_t>(is);
  for (std::uint32_t i = 0; i < n; ++i) {
    DracaenaLeaf lf;
    lf.base_angle = detail::get<double>(is);
    lf.deflection = detail::get<double>(is);
    lf.length = detail::get<double>(is);
    lf.width_cells = detail::get<std::int32_t>(is);
    lf.z_band = detail::get<std::int32_t>(is);
    lf.droop = detail::get<double>(is);
    lf.inner_radius = detail::get<double>(is);
    lf.color = detail::get_rgb(is);
    d.leaves.push_back(lf);
  }
  d.noise = detail::get_colorgrid(is);
  return d;
}

inline void save(const std::string& path, const PlantState& st) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw StorageError("snapshot: cannot open " + path);
  write(os, st);
}

inline PlantState load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw StorageError("snapshot: cannot open " + path);
  return read(is);
}

}  // namespace snapshot
}  // namespace ppg
