#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <variant>
#include <vector>

#include "ppg/core/action.hpp"
#include "ppg/core/grid.hpp"
#include "ppg/core/rng.hpp"

namespace ppg {

enum class Scenario : std::uint8_t {
  Base = 0,
  SparseVines = 1,
  SeparatedVines = 2,
  GrownDracaena = 3,
};

// Procedural generation ranges and dynamics constants. Everything that shapes
// an episode lives here so runs are reproducible from (config, seed) alone.
struct SimConfig {
  PlantKind kind = PlantKind::Vine;
  Scenario scenario = Scenario::Base;
  int board_h = 80;
  int board_w = 80;

  double effector_radius = 2.0;  // pushing disk radius, cm
  double color_noise = 8.0;      // per-cell additive render noise amplitude

  // vines
  int strand_min = 40, strand_max = 60;
  int strand_width_min = 2, strand_width_max = 3;
  double strand_depth_min = 5.0, strand_depth_max = 14.0;  // cm above board
  double stiffness_min = 0.82, stiffness_max = 0.96;
  double entangle = 0.35;    // neighbor coupling gamma
  double relaxation = 0.15;  // per-push decay of sway toward rest
  double cluster_fraction = 0.65;

  // dracaena
  int leaf_min = 26, leaf_max = 40;
  int leaf_width_min = 3, leaf_width_max = 5;
  double leaf_len_min = 12.0, leaf_len_max = 26.0;
  double droop_min = 0.25, droop_max = 0.55;
  double deflect_gain = 0.55;   // push tangential component -> leaf swing
  double tau_reveal = 3.0;      // cm height decrease counted as revealed
  double growth_factor = 1.35;  // leaf length multiplier for the grown scenario
};

inline SimConfig make_sim_config(PlantKind kind, Scenario scenario = Scenario::Base) {
  SimConfig cfg;
  cfg.kind = kind;
  cfg.scenario = scenario;
  if (kind == PlantKind::Dracaena) {
    cfg.board_h = 90;
    cfg.board_w = 90;
  }
  if (scenario == Scenario::SparseVines) {
    cfg.strand_min = 20;
    cfg.strand_max = 30;
  }
  return cfg;
}

// One hanging strand. The rendered path at row y is
// x = anchor_x + rest[y] + sway[y]; rest is the lie of the strand, sway is
// the push-induced deviation that decays back toward rest.
struct VineStrand {
  double anchor_x = 0;
  int width_cells = 2;
  double depth = 8.0;      // cm above the board
  double stiffness = 0.9;  // kappa
  Rgb color;
  std::vector<double> rest;
  std::vector<double> sway;

  double offset(int row) const { return rest[row] + sway[row]; }
};

struct VineState {
  int board_h = 0, board_w = 0;
  std::vector<VineStrand> strands;
  Rgb board_color{150, 110, 70};
  double entangle = 0.35;
  double relaxation = 0.15;
  double effector_radius = 2.0;
  double noise_amp = 8.0;
  ColorGrid noise;  // additive per-cell render noise, part of the state
};

struct DracaenaLeaf {
  double base_angle = 0;  // rad, position angle about the plant center
  double deflection = 0;  // rad, |deflection| <= pi/2
  double length = 18.0;   // cm
  int width_cells = 4;
  int z_band = 0;          // index into the push height levels
  double droop = 0.4;      // cm of height falloff per cm of radius
  double inner_radius = 4.0;
  Rgb color;

  double world_angle() const { return base_angle + deflection; }
};

struct DracaenaState {
  int board_h = 0, board_w = 0;
  double center_x = 45.0, center_y = 45.0;
  std::vector<DracaenaLeaf> leaves;
  Rgb ground_color{120, 110, 100};
  std::array<double, 3> band_height{32.5, 27.5, 22.5};  // leaf base height per z band, cm
  double wobble_rot = 0;                                // rigid pose of the whole plant
  double wobble_tx = 0, wobble_ty = 0;
  double effector_radius = 2.0;
  double deflect_gain = 0.55;
  double tau_reveal = 3.0;
  double noise_amp = 8.0;
  ColorGrid noise;
};

using PlantState = std::variant<VineState, DracaenaState>;

inline PlantKind plant_kind(const PlantState& s) {
  return std::holds_alternative<VineState>(s) ? PlantKind::Vine : PlantKind::Dracaena;
}

namespace detail {

inline Rgb green_jitter(Rng& rng) {
  return Rgb{static_cast<float>(rng.uniform(30, 70)), static_cast<float>(rng.uniform(110, 190)),
             static_cast<float>(rng.uniform(30, 80))};
}

inline ColorGrid make_noise_grid(int h, int w, double amp, Rng& rng) {
  ColorGrid g(h, w);
  for (auto& c : g.data) {
    c.r = static_cast<float>(rng.uniform(-amp, amp));
    c.g = static_cast<float>(rng.uniform(-amp, amp));
    c.b = static_cast<float>(rng.uniform(-amp, amp));
  }
  return g;
}

inline std::vector<double> strand_rest_walk(int rows, Rng& rng) {
  std::vector<double> rest(rows, 0.0);
  for (int y = 1; y < rows; ++y) rest[y] = 0.95 * rest[y - 1] + rng.normal(0.0, 0.3);
  return rest;
}

inline VineState init_vines(const SimConfig& cfg, Rng& rng) {
  VineState st;
  st.board_h = cfg.board_h;
  st.board_w = cfg.board_w;
  st.entangle = cfg.entangle;
  st.relaxation = cfg.relaxation;
  st.effector_radius = cfg.effector_radius;

  int n = rng.uniform_int(cfg.strand_min, cfg.strand_max);

  // Anchor distribution: clusters plus uniform background for the base and
  // sparse scenarios; disjoint bands for the separated scenario.
  std::vector<double> cluster_centers;
  int n_clusters = rng.uniform_int(3, 6);
  for (int i = 0; i < n_clusters; ++i) cluster_centers.push_back(rng.uniform(5.0, cfg.board_w - 5.0));

  std::vector<std::pair<double, double>> bands;
  if (cfg.scenario == Scenario::SeparatedVines) {
    double slot = cfg.board_w / 3.0;
    for (int b = 0; b < 3; ++b) {
      double c = rng.uniform(b * slot + 7.0, (b + 1) * slot - 7.0);
      bands.emplace_back(c - 6.0, c + 6.0);
    }
  }

  for (int i = 0; i < n; ++i) {
    VineStrand s;
    if (cfg.scenario == Scenario::SeparatedVines) {
      auto [lo, hi] = bands[rng.uniform_int(0, 2)];
      s.anchor_x = rng.uniform(lo, hi);
    } else if (rng.bernoulli(cfg.cluster_fraction)) {
      double c = cluster_centers[rng.uniform_index(cluster_centers.size())];
      s.anchor_x = std::clamp(c + rng.normal(0.0, 4.0), 0.5, cfg.board_w - 0.5);
    } else {
      s.anchor_x = rng.uniform(1.0, cfg.board_w - 1.0);
    }
    s.width_cells = rng.uniform_int(cfg.strand_width_min, cfg.strand_width_max);
    s.depth = rng.uniform(cfg.strand_depth_min, cfg.strand_depth_max);
    s.stiffness = rng.uniform(cfg.stiffness_min, cfg.stiffness_max);
    s.color = green_jitter(rng);
    s.rest = strand_rest_walk(cfg.board_h, rng);
    s.sway.assign(cfg.board_h, 0.0);
    st.strands.push_back(std::move(s));
  }
  st.noise_amp = cfg.color_noise;
  st.noise = make_noise_grid(cfg.board_h, cfg.board_w, cfg.color_noise, rng);
  return st;
}

inline DracaenaState init_dracaena(const SimConfig& cfg, Rng& rng) {
  DracaenaState st;
  st.board_h = cfg.board_h;
  st.board_w = cfg.board_w;
  st.center_x = cfg.board_w / 2.0 + rng.uniform(-1.5, 1.5);
  st.center_y = cfg.board_h / 2.0 + rng.uniform(-1.5, 1.5);
  st.effector_radius = cfg.effector_radius;
  st.deflect_gain = cfg.deflect_gain;
  st.tau_reveal = cfg.tau_reveal;

  double grow = cfg.scenario == Scenario::GrownDracaena ? cfg.growth_factor : 1.0;
  int n = rng.uniform_int(cfg.leaf_min, cfg.leaf_max);
  for (int i = 0; i < n; ++i) {
    DracaenaLeaf lf;
    lf.base_angle = rng.uniform(0.0, 6.283185307179586);
    lf.length = rng.uniform(cfg.leaf_len_min, cfg.leaf_len_max) * grow;
    lf.width_cells = rng.uniform_int(cfg.leaf_width_min, cfg.leaf_width_max);
    lf.z_band = rng.uniform_int(0, 2);
    lf.droop = rng.uniform(cfg.droop_min, cfg.droop_max);
    lf.inner_radius = rng.uniform(3.0, 6.0);
    lf.color = green_jitter(rng);
    if (cfg.scenario == Scenario::GrownDracaena) {
      lf.color.r = std::min(255.0f, lf.color.r + 12.0f);
      lf.color.g = std::max(0.0f, lf.color.g - 18.0f);
    }
    st.leaves.push_back(lf);
  }
  st.noise_amp = cfg.color_noise;
  st.noise = make_noise_grid(cfg.board_h, cfg.board_w, cfg.color_noise, rng);
  return st;
}

}  // namespace detail

// Deterministic in (cfg, rng identity): the same seed always reproduces the
// same plant bit for bit.
inline PlantState sim_init(const SimConfig& cfg, Rng rng) {
  if (cfg.kind == PlantKind::Vine) return detail::init_vines(cfg, rng);
  return detail::init_dracaena(cfg, rng);
}

// Reflects a vine state about the vertical line x = axis_x (test oracle for
// mirror equivariance of rendering and dynamics).
inline VineState mirror_vine_state(const VineState& st, double axis_x) {
  VineState m = st;
  for (auto& s : m.strands) {
    s.anchor_x = 2.0 * axis_x - s.anchor_x;
    for (auto& v : s.rest) v = -v;
    for (auto& v : s.sway) v = -v;
  }
  m.noise = flip_horizontal(st.noise);
  return m;
}

}  // namespace ppg
