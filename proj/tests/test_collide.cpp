#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fcit/validator.hpp"
#include "test_util.hpp"

using namespace fcit;

namespace {

constexpr double kPi = std::numbers::pi;

PlanarArm two_link() {
  PlanarArm arm;
  arm.link_lengths = {1.0, 1.0};
  arm.link_radius = 0.0;
  return arm;
}

}  // namespace

TEST_CASE("forward kinematics of a straight chain") {
  const auto links = forward_kinematics(two_link(), Config{0.0, 0.0});
  REQUIRE(links.size() == 2);
  CHECK(links[0].ax == 0.0);
  CHECK(links[0].ay == 0.0);
  CHECK(links[0].bx == doctest::Approx(1.0));
  CHECK(links[0].by == doctest::Approx(0.0));
  CHECK(links[1].bx == doctest::Approx(2.0));
  CHECK(links[1].by == doctest::Approx(0.0));
}

TEST_CASE("forward kinematics quarter turn") {
  PlanarArm arm;
  arm.link_lengths = {1.0};
  const auto links = forward_kinematics(arm, Config{kPi / 2.0});
  REQUIRE(links.size() == 1);
  CHECK(links[0].bx == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(links[0].by == doctest::Approx(1.0));
}

TEST_CASE("forward kinematics with cumulative angles") {
  // Independent check: compose rotations numerically instead of summing
  // angles, then compare joint positions.
  const Config q{kPi / 2.0, -kPi / 2.0};
  const auto links = forward_kinematics(two_link(), q);
  REQUIRE(links.size() == 2);
  CHECK(links[1].ax == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(links[1].ay == doctest::Approx(1.0));
  CHECK(links[1].bx == doctest::Approx(1.0));
  CHECK(links[1].by == doctest::Approx(1.0));

  double rot[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
  double px = 0.0, py = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double c = std::cos(q[i]), s = std::sin(q[i]);
    const double r00 = rot[0][0] * c + rot[0][1] * s;
    const double r01 = -rot[0][0] * s + rot[0][1] * c;
    const double r10 = rot[1][0] * c + rot[1][1] * s;
    const double r11 = -rot[1][0] * s + rot[1][1] * c;
    rot[0][0] = r00;
    rot[0][1] = r01;
    rot[1][0] = r10;
    rot[1][1] = r11;
    px += rot[0][0] * 1.0;  // link length 1 along the rotated x axis
    py += rot[1][0] * 1.0;
    CHECK(px == doctest::Approx(i == 0 ? links[0].bx : links[1].bx).epsilon(1e-12));
    CHECK(py == doctest::Approx(i == 0 ? links[0].by : links[1].by).epsilon(1e-12));
  }
}

TEST_CASE("forward kinematics rejects point robots") {
  CHECK_THROWS_AS(forward_kinematics(RobotModel{PointRobot{2}}, Config{0.0, 0.0}),
                  ContractViolation);
}

TEST_CASE("validate_state basics") {
  const RobotModel point = PointRobot{2};
  CHECK(validate_state(point, Environment{}, Config{0.4, 0.9}));

  Environment env;
  env.obstacles.emplace_back(Sphere{{0.5, 0.5}, 0.25});
  CHECK_FALSE(validate_state(point, env, Config{0.5, 0.5}));  // dead center
  CHECK(validate_state(point, env, Config{0.9, 0.9}));
  CHECK(validate_state(point, env, Config{0.75, 0.5}));  // boundary counts as valid
}

TEST_CASE("arm link passing through a sphere is invalid") {
  // Second link spans (1,0)-(2,0); the sphere at (1.5, 0) r=0.2 sits on it,
  // so the segment-center distance is 0 < 0.2.
  PlanarArm arm = two_link();
  Environment env;
  env.obstacles.emplace_back(Sphere{{1.5, 0.0}, 0.2});
  CHECK_FALSE(validate_state(arm, env, Config{0.0, 0.0}));
  // Lifting the chain out of the sphere's reach clears it.
  CHECK(validate_state(arm, env, Config{kPi / 2.0, 0.0}));
}

TEST_CASE("arm self collision on non-adjacent links") {
  PlanarArm arm;
  arm.link_lengths = {1.0, 1.0, 1.0};
  arm.link_radius = 0.05;
  // Folded so link 3 crosses link 1; adjacent pairs alone stay legal.
  const Config folded{0.0, 3.0, 3.0};
  CHECK_FALSE(validate_state(arm, Environment{}, folded));
  CHECK(validate_state(arm, Environment{}, Config{0.0, 0.5, 0.5}));
  // Zero-radius links only touch; the closure convention keeps that valid.
  arm.link_radius = 0.0;
  CHECK(validate_state(arm, Environment{}, folded));
}

TEST_CASE("block mask matches constructed patterns") {
  Environment env;
  env.obstacles.emplace_back(Sphere{{0.5, 0.5}, 0.1});
  const Validator validator(PointRobot{2}, env, 8);

  ValidationBlock block(2, 8);
  const Config inside{0.5, 0.5};
  const Config outside{0.9, 0.9};
  for (int l = 0; l < 8; ++l) {
    block.push((l % 2 == 0 ? outside : inside).view());
  }
  CHECK(validator.valid_mask(block) == 0b01010101u);

  block.clear();
  for (int l = 0; l < 8; ++l) block.push(outside.view());
  CHECK(validator.valid_mask(block) == 0xffu);

  block.clear();
  for (int l = 0; l < 3; ++l) block.push(outside.view());
  CHECK(validator.valid_mask(block) == 0b111u);  // unused lanes report 0
}

TEST_CASE("block validation agrees bitwise with the scalar validator") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const ProblemDef p = testutil::random_point_problem(trial + 5000);
    const Validator validator(p.robot, p.env, 8);
    ValidationBlock block(2, 8);
    std::vector<Config> lanes;
    for (int batch = 0; batch < 32; ++batch) {  // 40 * 32 * 8 = 10240 lanes
      block.clear();
      lanes.clear();
      for (int l = 0; l < 8; ++l) {
        lanes.push_back(testutil::random_config(rng, p.bounds));
        block.push(lanes.back().view());
      }
      const std::uint32_t mask = validator.valid_mask(block);
      for (int l = 0; l < 8; ++l) {
        CHECK(((mask >> l) & 1u) == (validator.is_valid(lanes[static_cast<std::size_t>(l)].view()) ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("block validation agrees for arm lanes and other widths") {
  PlanarArm arm;
  arm.link_lengths = {0.4, 0.3, 0.2};
  arm.link_radius = 0.02;
  Environment env;
  env.obstacles.emplace_back(AxisAlignedBox{{0.5, 0.1}, {0.9, 0.14}});
  env.obstacles.emplace_back(Sphere{{0.3, 0.4}, 0.1});
  Bounds bounds;
  bounds.lower = {-kPi, -kPi, -kPi};
  bounds.upper = {kPi, kPi, kPi};

  Rng rng(7);
  for (const int width : {2, 4, 8, 16}) {
    const Validator validator(arm, env, width);
    ValidationBlock block(3, width);
    for (int batch = 0; batch < 40; ++batch) {
      block.clear();
      std::vector<Config> lanes;
      for (int l = 0; l < width; ++l) {
        lanes.push_back(testutil::random_config(rng, bounds));
        block.push(lanes.back().view());
      }
      const std::uint32_t mask = validator.valid_mask(block);
      for (int l = 0; l < width; ++l) {
        CHECK(((mask >> l) & 1u) ==
              (validator.is_valid(lanes[static_cast<std::size_t>(l)].view()) ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("motion validation catches a straddled obstacle") {
  Environment env;
  env.obstacles.emplace_back(Sphere{{0.5, 0.5}, 0.1});
  const RobotModel point = PointRobot{2};
  // Both endpoints valid; only interior states hit the sphere.
  CHECK(validate_state(point, env, Config{0.2, 0.5}));
  CHECK(validate_state(point, env, Config{0.8, 0.5}));
  CHECK_FALSE(validate_motion(point, env, Config{0.2, 0.5}, Config{0.8, 0.5}, 0.05));
  CHECK(validate_motion(point, Environment{}, Config{0.2, 0.5}, Config{0.8, 0.5}, 0.05));
}

TEST_CASE("motion validation equals the sequential scalar oracle") {
  // Oracle: same m and same t = j/(m-1) parameters, applied front to back
  // with the scalar validator, after the same direction canonicalization.
  Rng rng(31337);
  int invalid_seen = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const ProblemDef p = testutil::random_point_problem(trial + 900);
    const Validator validator(p.robot, p.env, 8);
    for (int i = 0; i < 40; ++i) {  // 25 * 40 = 1000 motions
      Config a = testutil::random_config(rng, p.bounds);
      Config b = testutil::random_config(rng, p.bounds);
      const bool got = validator.check_motion(a.view(), b.view(), 0.05).valid;

      if (std::lexicographical_compare(b.coords.begin(), b.coords.end(), a.coords.begin(),
                                       a.coords.end())) {
        std::swap(a, b);
      }
      const int m = motion_state_count(distance(a, b), 0.05);
      bool want = true;
      for (int j = 0; j < m && want; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(m - 1);
        want = validator.is_valid(interpolate(a, b, t).view());
      }
      CHECK(got == want);
      if (!want) ++invalid_seen;
    }
  }
  CHECK(invalid_seen > 50);  // the sample must exercise both outcomes
}

TEST_CASE("motion validation is direction symmetric") {
  Rng rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    const ProblemDef p = testutil::random_point_problem(trial + 7100);
    const Validator validator(p.robot, p.env, 8);
    for (int i = 0; i < 25; ++i) {
      const Config a = testutil::random_config(rng, p.bounds);
      const Config b = testutil::random_config(rng, p.bounds);
      CHECK(validator.check_motion(a.view(), b.view(), 0.07).valid ==
            validator.check_motion(b.view(), a.view(), 0.07).valid);
    }
  }
}

TEST_CASE("finer resolution only finds more collisions") {
  Rng rng(808);
  for (int trial = 0; trial < 15; ++trial) {
    const ProblemDef p = testutil::random_point_problem(trial + 3200);
    const Validator validator(p.robot, p.env, 8);
    for (int i = 0; i < 20; ++i) {
      const Config a = testutil::random_config(rng, p.bounds);
      const Config b = testutil::random_config(rng, p.bounds);
      bool prev_valid = validator.check_motion(a.view(), b.view(), 0.4).valid;
      for (double res = 0.2; res >= 0.0124; res /= 2.0) {
        const bool now_valid = validator.check_motion(a.view(), b.view(), res).valid;
        if (!prev_valid) CHECK_FALSE(now_valid);
        prev_valid = now_valid;
      }
    }
  }
}

TEST_CASE("motion state count") {
  CHECK(motion_state_count(0.0, 0.05) == 3);
  CHECK(motion_state_count(0.05, 0.05) == 3);   // max(2, 1) rounds to 2 segments
  CHECK(motion_state_count(0.8, 0.05) == 17);   // 16 segments + endpoint
  CHECK(motion_state_count(0.801, 0.05) == 33); // 17 segments round up to 32
  CHECK(motion_state_count(0.2, 0.05) == 5);
  CHECK_THROWS_AS(motion_state_count(1.0, 0.0), ContractViolation);
}

TEST_CASE("segment geometry primitives") {
  CHECK(dist2_segment_segment_2d(0, 0, 1, 0, 0.5, -1, 0.5, 1) == 0.0);  // crossing
  CHECK(dist2_segment_segment_2d(0, 0, 1, 0, 0, 1, 1, 1) == doctest::Approx(1.0));
  CHECK(dist2_segment_segment_2d(0, 0, 0, 0, 2, 0, 2, 0) == doctest::Approx(4.0));  // degenerate

  CHECK(segment_intersects_box_2d(-1, 0.5, 2, 0.5, 0, 0, 1, 1, true));
  CHECK_FALSE(segment_intersects_box_2d(-1, 1.0, 2, 1.0, 0, 0, 1, 1, true));  // grazes the top
  CHECK(segment_intersects_box_2d(-1, 1.0, 2, 1.0, 0, 0, 1, 1, false));
  CHECK(dist2_segment_box_2d(-1, 2, 2, 2, 0, 0, 1, 1) == doctest::Approx(1.0));
  CHECK(dist2_segment_box_2d(0.5, 0.5, 0.6, 0.6, 0, 0, 1, 1) == 0.0);  // inside
}
