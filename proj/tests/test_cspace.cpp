#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcit/sampling.hpp"
#include "fcit/validator.hpp"
#include "test_util.hpp"

using namespace fcit;

TEST_CASE("distance basics") {
  CHECK(distance(Config{0, 0}, Config{3, 4}) == doctest::Approx(5.0).epsilon(1e-12));
  const Config x{0.3, -1.2, 7.5};
  CHECK(distance(x, x) == 0.0);
  CHECK(distance(Config{1, 2, 3}, Config{1, 2, 3.5}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(distance(Config{1, 2}, Config{1, 2, 3}), ContractViolation);
}

TEST_CASE("distance metric properties on random triples") {
  Rng rng(42);
  Bounds b;
  b.lower = {-5, -5, -5};
  b.upper = {5, 5, 5};
  for (int i = 0; i < 2000; ++i) {
    const Config a = testutil::random_config(rng, b);
    const Config c = testutil::random_config(rng, b);
    const Config d = testutil::random_config(rng, b);
    CHECK(std::abs(distance(a, c) - distance(c, a)) <= 1e-9);
    CHECK(distance(a, a) <= 1e-9);
    CHECK(distance(a, d) <= distance(a, c) + distance(c, d) + 1e-9);
    CHECK(distance(a, c) >= 0.0);
  }
}

TEST_CASE("interpolate endpoints and midpoint") {
  const Config a{0.25, -1.0};
  const Config b{2.0, 3.5};
  CHECK(interpolate(a, b, 0.0) == a);
  CHECK(interpolate(a, b, 1.0) == b);
  const Config mid = interpolate(Config{0, 0}, Config{2, 2}, 0.5);
  CHECK(mid == Config{1, 1});
  CHECK_THROWS_AS(interpolate(a, b, 1.5), ContractViolation);
  CHECK_THROWS_AS(interpolate(a, b, -0.1), ContractViolation);
  CHECK_THROWS_AS(interpolate(a, Config{1, 2, 3}, 0.5), ContractViolation);
}

TEST_CASE("heuristic cost to go") {
  SampleStore store(2);
  store.append(Config{0, 0});
  GoalSet goals;
  goals.ids.push_back(store.append(Config{0, 0}));
  goals.ids.push_back(store.append(Config{10, 0}));

  CHECK(heuristic_cost_to_go(Config{0, 0}, goals, store) == 0.0);
  CHECK(heuristic_cost_to_go(Config{4, 0}, goals, store) == doctest::Approx(4.0).epsilon(1e-12));

  GoalSet single;
  single.ids = {goals.ids[1]};
  CHECK(heuristic_cost_to_go(Config{4, 0}, single, store) == doctest::Approx(6.0).epsilon(1e-12));

  GoalSet empty;
  CHECK_THROWS_AS(heuristic_cost_to_go(Config{0, 0}, empty, store), ContractViolation);
}

TEST_CASE("sample store layout and invariants") {
  SampleStore store(3, 4);
  std::vector<SampleId> ids;
  for (int i = 0; i < 11; ++i) {
    ids.push_back(store.append(Config{i * 1.0, i * 2.0, i * 3.0}));
  }
  for (int i = 0; i < 11; ++i) {
    CHECK(ids[static_cast<std::size_t>(i)] == i);  // append order, never reused
    CHECK(store.coord(i, 1) == i * 2.0);
  }
  // Block-aligned lanes: W consecutive samples readable per coordinate.
  CHECK(store.block_count() == 3);
  CHECK(store.block_occupancy(2) == 3);
  const double* lanes = store.block_lane_values(1, 2);  // block 1, coordinate z
  for (int l = 0; l < 4; ++l) {
    CHECK(lanes[l] == (4 + l) * 3.0);
  }
  CHECK_THROWS_AS(store.append(Config{1.0, kInf, 0.0}), ContractViolation);
  CHECK_THROWS_AS(store.append(Config{1.0, 2.0}), ContractViolation);
}

namespace {

Environment half_blocked() {
  Environment env;
  env.obstacles.emplace_back(AxisAlignedBox{{0.5, -1.0}, {2.0, 2.0}});
  return env;
}

Bounds unit_box(int d = 2) {
  Bounds b;
  b.lower.assign(static_cast<std::size_t>(d), 0.0);
  b.upper.assign(static_cast<std::size_t>(d), 1.0);
  return b;
}

}  // namespace

TEST_CASE("sample_batch fills the request and respects bounds") {
  const Validator validator(PointRobot{2}, Environment{});
  SampleStore store(2);
  SamplerState sampler(SamplerKind::kPseudorandom, 7, 2);
  const Bounds bounds = unit_box();
  const auto ids = sample_batch(store, 100, sampler, validator, bounds);
  CHECK(ids.size() == 100);
  CHECK(store.size() == 100);
  for (SampleId id : ids) {
    CHECK(bounds.contains(store.config(id).view()));
  }
  CHECK_THROWS_AS(sample_batch(store, 0, sampler, validator, bounds), ContractViolation);
}

TEST_CASE("sample_batch is bitwise reproducible for a fixed seed") {
  for (const SamplerKind kind : {SamplerKind::kPseudorandom, SamplerKind::kHalton}) {
    const Validator validator(PointRobot{2}, half_blocked());
    SampleStore a(2), b(2);
    SamplerState sa(kind, 1234, 2), sb(kind, 1234, 2);
    sample_batch(a, 60, sa, validator, unit_box());
    sample_batch(b, 60, sb, validator, unit_box());
    REQUIRE(a.size() == b.size());
    for (SampleId id = 0; id < a.size(); ++id) {
      CHECK(a.coord(id, 0) == b.coord(id, 0));
      CHECK(a.coord(id, 1) == b.coord(id, 1));
    }
  }
}

TEST_CASE("sample_batch output passes the scalar validator") {
  // Oracle: re-run every returned id through the plain state check.
  const Validator validator(PointRobot{2}, half_blocked());
  SampleStore store(2);
  SamplerState sampler(SamplerKind::kPseudorandom, 99, 2);
  const auto ids = sample_batch(store, 50, sampler, validator, unit_box());
  CHECK(ids.size() == 50);
  for (SampleId id : ids) {
    const Config q = store.config(id);
    CHECK(validator.is_valid(q.view()));
    CHECK(q[0] < 0.5);  // the valid half
  }
}

TEST_CASE("sample_batch starves on a nearly full world") {
  Environment env;
  env.obstacles.emplace_back(AxisAlignedBox{{-1.0, -1.0}, {2.0, 2.0}});  // everything blocked
  const Validator validator(PointRobot{2}, env);
  SampleStore store(2);
  SamplerState sampler(SamplerKind::kPseudorandom, 3, 2);
  CHECK_THROWS_AS(sample_batch(store, 5, sampler, validator, unit_box(), 100), SamplingStarved);
  try {
    SamplerState s2(SamplerKind::kPseudorandom, 3, 2);
    sample_batch(store, 5, s2, validator, unit_box(), 100);
  } catch (const SamplingStarved& e) {
    CHECK(e.attempts == 500);
    CHECK(e.produced == 0);
  }
}

TEST_CASE("halton stream consistency across call boundaries") {
  const Validator validator(PointRobot{2}, half_blocked());
  SampleStore one(2), split(2);
  SamplerState s_one(SamplerKind::kHalton, 0, 2);
  SamplerState s_split(SamplerKind::kHalton, 0, 2);
  sample_batch(one, 80, s_one, validator, unit_box());
  for (int call = 0; call < 8; ++call) {
    sample_batch(split, 10, s_split, validator, unit_box());
  }
  REQUIRE(one.size() == split.size());
  for (SampleId id = 0; id < one.size(); ++id) {
    CHECK(one.coord(id, 0) == split.coord(id, 0));
    CHECK(one.coord(id, 1) == split.coord(id, 1));
  }
}

TEST_CASE("bounds validation") {
  Bounds b;
  b.lower = {0.0, 1.0};
  b.upper = {1.0, 1.0};
  CHECK_THROWS_AS(b.validate(), ContractViolation);
  b.upper = {1.0, 2.0};
  CHECK_NOTHROW(b.validate());
  CHECK(b.diameter() == doctest::Approx(std::sqrt(2.0)));
}
