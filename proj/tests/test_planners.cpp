#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fcit/fcit_planner.hpp"
#include "fcit/rrt.hpp"
#include "fcit/shortcut.hpp"
#include "fcit/suites.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fcit;

namespace {

PlannerSettings batch_settings(int batches, int batch_size = 100, std::uint64_t seed = 0) {
  PlannerSettings s;
  s.max_batches = batches;
  s.batch_size = batch_size;
  s.seed = seed;
  return s;
}

// Frozen from the dense-grid shortest-path oracle on the canonical
// wall-gap world (cell 1e-3, reach 4); see oracles::grid_geodesic.
constexpr double kWallGapGeodesic = 1.023591347;

bool strictly_decreasing(const std::vector<TraceEvent>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (!(trace[i].cost < trace[i - 1].cost)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("settings require exactly one termination criterion") {
  PlannerSettings s;
  CHECK_THROWS_AS(s.validate(), ContractViolation);  // none set
  s.time_budget_s = 1.0;
  s.max_batches = 3;
  CHECK_THROWS_AS(s.validate(), ContractViolation);  // two set
  s.time_budget_s.reset();
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("empty world solves to the straight line in the first batch") {
  ProblemDef p = make_empty_problem(2);
  p.start = Config{0.0, 0.0};
  p.goals = {Config{1.0, 0.0}};
  p.bounds.lower = {-0.1, -0.1};
  p.bounds.upper = {1.1, 1.1};
  const PlanResult r = fcit_plan(p, batch_settings(1));
  CHECK(r.solved);
  CHECK(std::abs(r.cost - 1.0) <= 1e-9);
  CHECK(r.counters.batches == 1);
  REQUIRE(r.path.size() == 2);
  CHECK(r.path.front() == p.start);
  CHECK(r.path.back() == p.goals.front());
  REQUIRE(r.trace.size() == 1);
  CHECK(r.initial_cost == r.cost);
}

TEST_CASE("wall-gap cost converges to the grid geodesic") {
  const ProblemDef p = make_wall_gap_problem();
  const PlanResult r = fcit_plan(p, batch_settings(10, 100, 7));
  REQUIRE(r.solved);
  CHECK(std::abs(r.cost - kWallGapGeodesic) / kWallGapGeodesic <= 0.02);
  CHECK(strictly_decreasing(r.trace));
  CHECK(testutil::path_revalidates(p, r.path, kDefaultResolution));
}

TEST_CASE("fcit reports failure on an infeasible world") {
  ProblemDef p = make_empty_problem(2);
  testutil::enclose_goal(p);
  p.validate();  // the goal state itself stays valid
  const PlanResult r = fcit_plan(p, batch_settings(3, 60));
  CHECK_FALSE(r.solved);
  CHECK(r.cost == kInf);
  CHECK(r.trace.empty());
  CHECK(r.counters.batches == 3);
  CHECK(r.counters.queue_pops > 0);
  CHECK(r.counters.states_checked > 0);
}

TEST_CASE("fcit incumbent equals graph dijkstra after every batch") {
  // Light version of the oracle sweep the acceptance suite runs at scale.
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const ProblemDef p = testutil::random_point_problem(seed + 40);
    PlannerSettings s = batch_settings(3, 15, seed);
    FcitHooks hooks;
    hooks.paranoid_checks = true;
    FcitPlanner planner(p, s, hooks);
    const Validator oracle_validator(p.robot, p.env, s.block_width);
    for (int b = 0; b < 3; ++b) {
      planner.run_batch_search();
      const double want =
          oracles::graph_dijkstra(planner.store(), oracle_validator, s.resolution, 0, planner.goals());
      const double got = planner.incumbent();
      if (std::isinf(want)) {
        CHECK(std::isinf(got));
      } else {
        CHECK(std::abs(want - got) <= 1e-9);
      }
      planner.add_samples();
    }
  }
}

TEST_CASE("rdisc with a radius covering the space matches fully connected pops") {
  const ProblemDef p = make_wall_gap_problem();
  std::vector<std::pair<SampleId, SampleId>> pops_fc, pops_rd;

  PlannerSettings s = batch_settings(4, 40, 11);
  FcitHooks hooks_fc;
  hooks_fc.on_pop = [&](SampleId a, SampleId b) { pops_fc.emplace_back(a, b); };
  FcitPlanner fc(p, s, hooks_fc);
  const PlanResult r_fc = fc.plan();

  s.rdisc_radius = p.bounds.diameter();  // the disc covers everything
  FcitHooks hooks_rd;
  hooks_rd.on_pop = [&](SampleId a, SampleId b) { pops_rd.emplace_back(a, b); };
  FcitPlanner rd(p, s, hooks_rd);
  const PlanResult r_rd = rd.plan();

  CHECK(pops_fc == pops_rd);
  CHECK(r_fc.cost == r_rd.cost);
  CHECK(r_fc.counters == r_rd.counters);
}

TEST_CASE("rdisc below the gap clearance fails where fully connected solves") {
  // Few samples and a small radius: the disc graph cannot bridge the wall.
  const ProblemDef p = make_wall_gap_problem();
  PlannerSettings s = batch_settings(2, 12, 5);

  FcitPlanner fc(p, s);
  const PlanResult r_fc = fc.plan();
  REQUIRE(r_fc.solved);

  s.rdisc_radius = 0.22;
  FcitPlanner rd(p, s);
  const PlanResult r_rd = rd.plan();
  CHECK_FALSE(r_rd.solved);

  // Oracle confirmation on the final (identical) sample set: the full graph
  // has a path, the radius-limited subgraph does not.
  REQUIRE(rd.store().size() == fc.store().size());
  const Validator v(p.robot, p.env, s.block_width);
  const double full = oracles::graph_dijkstra(fc.store(), v, s.resolution, 0, fc.goals());
  const double disc =
      oracles::graph_dijkstra(rd.store(), v, s.resolution, 0, rd.goals(), s.rdisc_radius);
  CHECK(std::isfinite(full));
  CHECK(std::isinf(disc));
}

TEST_CASE("rdisc cost never beats fully connected on identical samples") {
  int strict = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProblemDef p = testutil::random_point_problem(seed + 600);
    PlannerSettings s = batch_settings(3, 25, seed * 13 + 1);
    FcitPlanner fc(p, s);
    s.rdisc_radius = p.bounds.diameter() / 2.0;
    FcitPlanner rd(p, s);
    for (int b = 0; b < 3; ++b) {
      fc.run_batch_search();
      rd.run_batch_search();
      CHECK(fc.incumbent() <= rd.incumbent() + 1e-12);
      fc.add_samples();
      rd.add_samples();
    }
    if (fc.incumbent() < rd.incumbent() - 1e-12) ++strict;
    // Same seed, same sampler: the two runs saw identical sample sets.
    REQUIRE(fc.store().size() == rd.store().size());
    for (SampleId id = 0; id < fc.store().size(); ++id) {
      REQUIRE(fc.store().coord(id, 0) == rd.store().coord(id, 0));
    }
  }
  CHECK(strict >= 1);
}

TEST_CASE("fcit runs are deterministic") {
  const ProblemDef p = make_wall_gap_problem();
  const PlannerSettings s = batch_settings(5, 60, 123);
  const PlanResult a = fcit_plan(p, s);
  const PlanResult b = fcit_plan(p, s);
  CHECK(a.solved == b.solved);
  CHECK(a.cost == b.cost);
  CHECK(a.counters == b.counters);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].cost == b.trace[i].cost);
  }
  REQUIRE(a.path.size() == b.path.size());
  for (std::size_t i = 0; i < a.path.size(); ++i) {
    CHECK(a.path[i] == b.path[i]);
  }
}

TEST_CASE("edge evaluation economy") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ProblemDef p = testutil::random_point_problem(seed + 1500);
    PairSet validated;
    bool repeat = false;
    FcitHooks hooks;
    hooks.paranoid_checks = true;
    hooks.on_validate = [&](SampleId a, SampleId b) {
      if (validated.contains(a, b)) repeat = true;
      validated.insert(a, b);
    };
    FcitPlanner planner(p, batch_settings(4, 50, seed), hooks);
    const PlanResult r = planner.plan();
    CHECK_FALSE(repeat);
    CHECK(r.counters.edges_validated <= r.counters.queue_pops);
    CHECK(planner.invalid_edges().is_symmetric());
  }
}

TEST_CASE("sampling starvation surfaces as a note with partial results") {
  ProblemDef p = make_empty_problem(2);
  // Nearly everything is blocked, but start and goal stay valid.
  p.env.obstacles.emplace_back(AxisAlignedBox{{0.15, -1.0}, {2.0, 2.0}});
  p.start = Config{0.05, 0.1};
  p.goals = {Config{0.1, 0.9}};
  PlannerSettings s = batch_settings(4, 50, 3);
  s.rejection_budget_per_sample = 2;  // tiny budget: starves immediately
  const PlanResult r = fcit_plan(p, s);
  CHECK(r.note == std::string("sampling starved: attempt budget exceeded"));
  CHECK(r.solved);  // the direct edge was already found in batch 1
}

TEST_CASE("rrt_connect solves the empty world above the straight-line bound") {
  ProblemDef p = make_empty_problem(2);
  PlannerSettings s;
  s.time_budget_s = 5.0;
  s.seed = 42;
  const PlanResult r = rrt_connect(p, s);
  REQUIRE(r.solved);
  const double straight = distance(p.start, p.goals.front());
  CHECK(r.cost >= straight - 1e-9);
  CHECK(r.trace.size() == 1);
  CHECK(testutil::path_revalidates(p, r.path, s.resolution));
}

TEST_CASE("rrt_connect fails cleanly on an infeasible world") {
  ProblemDef p = make_empty_problem(2);
  testutil::enclose_goal(p);
  PlannerSettings s;
  s.max_batches = 4000;
  s.seed = 9;
  const PlanResult r = rrt_connect(p, s);
  CHECK_FALSE(r.solved);
  CHECK(r.trace.empty());
  CHECK(r.counters.edges_validated > 0);
}

TEST_CASE("rrt_connect solves seeded wall-gap trials with valid paths") {
  const ProblemDef p = make_wall_gap_problem();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PlannerSettings s;
    s.time_budget_s = 5.0;
    s.seed = seed;
    const PlanResult r = rrt_connect(p, s);
    REQUIRE(r.solved);
    CHECK(testutil::path_revalidates(p, r.path, s.resolution));
    CHECK(r.cost == path_cost(r.path));
  }
}

TEST_CASE("rrt_star approaches the straight line in an empty world") {
  ProblemDef p = make_empty_problem(2);
  PlannerSettings s;
  s.max_batches = 4000;
  s.seed = 17;
  s.rrt_range = 0.3;
  const PlanResult r = rrt_star(p, s);
  REQUIRE(r.solved);
  const double straight = distance(p.start, p.goals.front());
  CHECK(r.cost <= 1.05 * straight);  // known optimum: the segment itself
  CHECK(r.cost >= straight - 1e-9);
  CHECK(strictly_decreasing(r.trace));
  CHECK(testutil::path_revalidates(p, r.path, s.resolution));
}

TEST_CASE("rrt_star is unsolved on an infeasible world and deterministic") {
  ProblemDef p = make_empty_problem(2);
  testutil::enclose_goal(p);
  PlannerSettings s;
  s.max_batches = 1500;
  s.seed = 4;
  const PlanResult a = rrt_star(p, s);
  CHECK_FALSE(a.solved);
  const PlanResult b = rrt_star(p, s);
  CHECK(a.counters == b.counters);
}

TEST_CASE("shortcut with zero iterations is the identity") {
  const ProblemDef p = make_empty_problem(2);
  const Validator v(p.robot, p.env);
  Rng rng(1);
  const std::vector<Config> path{Config{0.1, 0.1}, Config{0.5, 0.9}, Config{0.9, 0.1}};
  const auto out = shortcut(path, v, rng, 0, 0.05);
  CHECK(out == path);
}

TEST_CASE("shortcut straightens a zig-zag in an empty world") {
  const ProblemDef p = make_empty_problem(2);
  const Validator v(p.robot, p.env);
  Rng rng(12);
  const std::vector<Config> path{Config{0.1, 0.1}, Config{0.5, 0.9}, Config{0.9, 0.1}};
  const auto out = shortcut(path, v, rng, 500, 0.05);
  const double straight = distance(path.front(), path.back());
  CHECK(path_cost(out) <= path_cost(path));
  CHECK(std::abs(path_cost(out) - straight) <= 1e-6);
  CHECK(out.front() == path.front());
  CHECK(out.back() == path.back());
}

TEST_CASE("shortcut never increases cost and outputs revalidate") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const ProblemDef p = testutil::random_point_problem(seed + 2600);
    PlannerSettings s;
    s.time_budget_s = 5.0;
    s.seed = seed;
    s.shortcut_iterations = 0;  // raw rrt-connect path
    const PlanResult r = rrt_connect(p, s);
    if (!r.solved) continue;
    const Validator v(p.robot, p.env);
    Rng rng(seed * 31 + 5);
    const auto out = shortcut(r.path, v, rng, 60, s.resolution);
    CHECK(path_cost(out) <= path_cost(r.path) + 1e-12);
    CHECK(testutil::path_revalidates(p, out, s.resolution));
  }
}

TEST_CASE("anytime traces never increase across planners") {
  const ProblemDef p = make_wall_gap_problem();
  PlannerSettings s = batch_settings(6, 80, 2);
  CHECK(strictly_decreasing(fcit_plan(p, s).trace));
  PlannerSettings rs;
  rs.max_batches = 3000;
  rs.seed = 2;
  CHECK(strictly_decreasing(rrt_star(p, rs).trace));
}

TEST_CASE("fcit_plan_rdisc requires a radius") {
  const ProblemDef p = make_empty_problem(2);
  CHECK_THROWS_AS(fcit_plan_rdisc(p, batch_settings(1)), ContractViolation);
}
