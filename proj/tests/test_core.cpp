#include <catch2/catch_amalgamated.hpp>

#include "ppg/core/action.hpp"
#include "ppg/core/coverage.hpp"
#include "ppg/core/geometry.hpp"
#include "ppg/core/rng.hpp"

using namespace ppg;

TEST_CASE("rng streams are reproducible and named substreams differ", "[core]") {
  Rng a(1234), b(1234);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());

  Rng root(99);
  Rng s1 = root.substream("sim");
  Rng s2 = root.substream("data");
  Rng s1b = root.substream("sim");
  REQUIRE(s1.next_u64() == s1b.next_u64());
  REQUIRE(s1.next_u64() != s2.next_u64());

  Rng c0 = root.child(0), c1 = root.child(1);
  REQUIRE(c0.next_u64() != c1.next_u64());
}

TEST_CASE("rng uniform and normal ranges", "[core]") {
  Rng r(7);
  double mean = 0;
  for (int i = 0; i < 2000; ++i) {
    double u = r.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    mean += r.normal();
  }
  REQUIRE(std::abs(mean / 2000.0) < 0.1);
}

TEST_CASE("vine action space shape", "[core]") {
  ActionSpace s = make_vine_space();
  REQUIRE(s.angles.size() == 7);
  REQUIRE(s.z_levels.size() == 1);
  REQUIRE(s.start_xs.size() == 20);
  REQUIRE(s.start_ys.size() == 20);
  REQUIRE(s.angles[0] == 0.0);
  REQUIRE(s.angles[6] == Catch::Approx(3.14159265358979));
  REQUIRE(s.is_start_center(21.0, 21.0));
  REQUIRE(s.is_start_center(59.0, 59.0));
  REQUIRE_FALSE(s.is_start_center(20.0, 21.0));
  REQUIRE_FALSE(s.is_start_center(19.0, 21.0));
}

TEST_CASE("dracaena action space shape", "[core]") {
  ActionSpace s = make_dracaena_space();
  REQUIRE(s.angles.size() == 8);
  REQUIRE(s.z_levels.size() == 3);
  REQUIRE(s.start_xs.size() == 29);
  REQUIRE(s.start_ys.size() == 27);
  // starts inside the exclusion rectangle are not legal
  REQUIRE_FALSE(s.start_allowed(45.0, 45.0));
  REQUIRE(s.start_allowed(17.0, 19.0));
  // every reachable start cell sits outside the exclusion
  for (double x : s.start_xs)
    for (double y : s.start_ys)
      if (s.start_allowed(x, y)) {
        REQUIRE(s.reach.contains(x, y));
        REQUIRE_FALSE(s.exclusion->contains(x, y));
      }
}

TEST_CASE("clip_action lengths", "[core]") {
  ActionSpace s = make_vine_space();

  SECTION("interior start pushes the full 15 cm") {
    ActionSpec a = clip_action(s, 41.0, 41.0, 0);
    REQUIRE(a.length == Catch::Approx(15.0));
  }
  SECTION("start 5 cm from the right boundary clips to 5") {
    ActionSpec a = clip_action(s, 55.0, 41.0, 0);
    REQUIRE(a.length == Catch::Approx(5.0));
  }
  SECTION("start on the right boundary pushing right is infeasible") {
    REQUIRE_THROWS_AS(clip_action(s, 60.0, 41.0, 0), InfeasibleActionError);
  }
  SECTION("start outside the reachable region is infeasible") {
    REQUIRE_THROWS_AS(clip_action(s, 10.0, 41.0, 0), InfeasibleActionError);
  }
  SECTION("diagonal pushes clip on the first boundary hit") {
    // angle pi/3 moves up-left at 60 degrees; exit through the top edge
    ActionSpec a = clip_action(s, 41.0, 25.0, 2);
    double sin60 = std::sqrt(3.0) / 2.0;
    REQUIRE(a.length == Catch::Approx(5.0 / sin60));
  }
}

TEST_CASE("clip_action is idempotent", "[core]") {
  ActionSpace s = make_vine_space();
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    double x = s.start_xs[rng.uniform_index(s.start_xs.size())];
    double y = s.start_ys[rng.uniform_index(s.start_ys.size())];
    int dir = static_cast<int>(rng.uniform_index(s.angles.size()));
    ActionSpec a;
    try {
      a = clip_action(s, x, y, dir);
    } catch (const InfeasibleActionError&) {
      continue;
    }
    ActionSpec b = clip_action(s, a.x, a.y, a.dir_index, a.z_index);
    REQUIRE(a.length == b.length);
    // swept endpoint stays inside the closed reachable rectangle
    auto [ux, uy] = s.push_units[a.dir_index];
    double ex = a.x + a.length * ux, ey = a.y + a.length * uy;
    REQUIRE(ex >= s.reach.x0 - 1e-9);
    REQUIRE(ex <= s.reach.x1 + 1e-9);
    REQUIRE(ey >= s.reach.y0 - 1e-9);
    REQUIRE(ey <= s.reach.y1 + 1e-9);
  }
}

TEST_CASE("mirror_action maps angles and starts", "[core]") {
  ActionSpace s = make_vine_space();

  ActionSpec a{21.0, 31.0, 0, 0, 12.0};
  ActionSpec m = mirror_action(s, a, 40.0);
  REQUIRE(m.dir_index == 6);  // 0 -> pi
  REQUIRE(m.x == Catch::Approx(59.0));
  REQUIRE(m.y == a.y);
  REQUIRE(m.length == a.length);

  ActionSpec b{25.0, 31.0, 1, 0, 12.0};  // pi/6 -> 5pi/6
  REQUIRE(mirror_action(s, b, 40.0).dir_index == 5);

  ActionSpec c{25.0, 31.0, 3, 0, 12.0};  // pi/2 fixed point
  REQUIRE(mirror_action(s, c, 40.0).dir_index == 3);

  SECTION("mirrored start off the center grid is rejected") {
    REQUIRE_THROWS_AS(mirror_action(s, a, 39.5), InfeasibleActionError);
  }
}

TEST_CASE("mirror_action is an involution", "[core]") {
  for (PlantKind kind : {PlantKind::Vine, PlantKind::Dracaena}) {
    ActionSpace s = make_space(kind);
    Rng rng(kind == PlantKind::Vine ? 5u : 6u);
    int tested = 0;
    while (tested < 200) {
      double x = s.start_xs[rng.uniform_index(s.start_xs.size())];
      double y = s.start_ys[rng.uniform_index(s.start_ys.size())];
      if (!s.start_allowed(x, y)) continue;
      int dir = static_cast<int>(rng.uniform_index(s.angles.size()));
      ActionSpec a{x, y, dir, 0, 10.0};
      double axis = s.board_w / 2.0;
      ActionSpec mm;
      try {
        mm = mirror_action(s, mirror_action(s, a, axis), axis);
      } catch (const InfeasibleActionError&) {
        // mirrored start can land in the exclusion zone; skip those
        ++tested;
        continue;
      }
      REQUIRE(mm == a);
      ++tested;
    }
  }
}

TEST_CASE("mask_new_space subtracts coverage", "[core]") {
  BoolGrid cand(2, 2, 1);
  CoverageMap cov(2, 2);
  cov.revealed.at(0, 0) = 1;
  BoolGrid out = mask_new_space(cand, cov);
  REQUIRE(out.at(0, 0) == 0);
  REQUIRE(out.at(0, 1) == 1);
  REQUIRE(out.at(1, 0) == 1);
  REQUIRE(out.at(1, 1) == 1);

  SECTION("all-covered yields empty") {
    CoverageMap full(2, 2);
    full.revealed.data.assign(4, 1);
    REQUIRE(count_true(mask_new_space(cand, full)) == 0);
  }
  SECTION("candidate equal to coverage yields empty") {
    BoolGrid c2(2, 2, 0);
    c2.at(0, 1) = 1;
    CoverageMap cov2(2, 2);
    cov2.revealed = c2;
    REQUIRE(count_true(mask_new_space(c2, cov2)) == 0);
  }
  SECTION("shape mismatch throws") {
    CoverageMap bad(3, 2);
    REQUIRE_THROWS_AS(mask_new_space(cand, bad), DimensionError);
  }
  SECTION("result never intersects coverage") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      BoolGrid c(8, 8, 0);
      CoverageMap cv(8, 8);
      for (auto& v : c.data) v = rng.bernoulli(0.5);
      for (auto& v : cv.revealed.data) v = rng.bernoulli(0.5);
      BoolGrid nw = mask_new_space(c, cv);
      for (std::size_t i = 0; i < nw.data.size(); ++i)
        REQUIRE((nw.data[i] && cv.revealed.data[i]) == false);
    }
  }
}

TEST_CASE("capsule rasterization matches the distance predicate", "[core]") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    double ax = rng.uniform(5, 25), ay = rng.uniform(5, 25);
    double bx = ax + rng.uniform(-10, 10), by = ay + rng.uniform(-10, 10);
    double r = rng.uniform(1.0, 3.0);
    BoolGrid g = rasterize_capsule(30, 30, ax, ay, bx, by, r);
    for (int y = 0; y < 30; ++y)
      for (int x = 0; x < 30; ++x) {
        bool expect = dist_point_segment(x + 0.5, y + 0.5, ax, ay, bx, by) <= r;
        REQUIRE(static_cast<bool>(g.at(y, x)) == expect);
      }
  }
}
