#include "fcit/suites.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <numbers>

#include "fcit/problem_io.hpp"
#include "fcit/rrt.hpp"
#include "fcit/validator.hpp"

namespace fcit {

namespace {

constexpr double kPi = std::numbers::pi;

ProblemDef base_point_problem(const std::string& name) {
  ProblemDef p;
  p.name = name;
  p.bounds.lower = {0.0, 0.0};
  p.bounds.upper = {1.0, 1.0};
  p.robot = PointRobot{2};
  return p;
}

std::string numbered(const std::string& stem, int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "-%02d", i);
  return stem + buf;
}

/// Breadth-first reachability over a fine occupancy grid; deterministic
/// feasibility check for generated 2-D point problems.
bool grid_reachable(const ProblemDef& p, double cell = 0.005) {
  const Validator validator(p.robot, p.env);
  const int nx = static_cast<int>(std::round((p.bounds.upper[0] - p.bounds.lower[0]) / cell)) + 1;
  const int ny = static_cast<int>(std::round((p.bounds.upper[1] - p.bounds.lower[1]) / cell)) + 1;
  auto index = [&](int ix, int iy) { return iy * nx + ix; };
  auto to_cell = [&](const Config& q) {
    return std::pair<int, int>{
        static_cast<int>(std::round((q[0] - p.bounds.lower[0]) / cell)),
        static_cast<int>(std::round((q[1] - p.bounds.lower[1]) / cell))};
  };
  std::vector<char> valid(static_cast<std::size_t>(nx) * ny);
  double q[2];
  for (int iy = 0; iy < ny; ++iy) {
    q[1] = p.bounds.lower[1] + iy * cell;
    for (int ix = 0; ix < nx; ++ix) {
      q[0] = p.bounds.lower[0] + ix * cell;
      valid[static_cast<std::size_t>(index(ix, iy))] = validator.is_valid({q, 2}) ? 1 : 0;
    }
  }
  const auto [sx, sy] = to_cell(p.start);
  const auto [gx, gy] = to_cell(p.goals.front());
  if (!valid[static_cast<std::size_t>(index(sx, sy))] || !valid[static_cast<std::size_t>(index(gx, gy))]) {
    return false;
  }
  std::vector<char> seen(valid.size(), 0);
  std::deque<std::pair<int, int>> frontier{{sx, sy}};
  seen[static_cast<std::size_t>(index(sx, sy))] = 1;
  while (!frontier.empty()) {
    const auto [x, y] = frontier.front();
    frontier.pop_front();
    if (x == gx && y == gy) return true;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int tx = x + dx, ty = y + dy;
        if (tx < 0 || ty < 0 || tx >= nx || ty >= ny) continue;
        const auto ti = static_cast<std::size_t>(index(tx, ty));
        if (seen[ti] || !valid[ti]) continue;
        seen[ti] = 1;
        frontier.emplace_back(tx, ty);
      }
    }
  }
  return false;
}

std::vector<ProblemDef> gen_empty(int count, Rng& rng) {
  std::vector<ProblemDef> out;
  for (int i = 0; i < count; ++i) {
    ProblemDef p = base_point_problem(numbered("empty", i));
    for (;;) {
      p.start = Config{rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95)};
      Config goal{rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95)};
      if (distance(p.start, goal) > 0.5) {
        p.goals = {goal};
        break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

ProblemDef wall_gap_variant(const std::string& name, double wall_x, double wall_top) {
  ProblemDef p = base_point_problem(name);
  p.env.obstacles.emplace_back(AxisAlignedBox{{wall_x - 0.05, -1.0}, {wall_x + 0.05, wall_top}});
  p.start = Config{0.1, 0.5};
  p.goals = {Config{0.9, 0.5}};
  return p;
}

std::vector<ProblemDef> gen_wall_gap(int count, Rng& rng) {
  std::vector<ProblemDef> out;
  // The first problem is the canonical instance; variants move the wall.
  out.push_back(make_wall_gap_problem());
  out.front().name = numbered("wall-gap", 0);
  for (int i = 1; i < count; ++i) {
    const double wall_x = rng.uniform(0.3, 0.7);
    const double wall_top = rng.uniform(0.6, 0.85);
    out.push_back(wall_gap_variant(numbered("wall-gap", i), wall_x, wall_top));
  }
  return out;
}

std::vector<ProblemDef> gen_random_spheres(int count, Rng& rng) {
  std::vector<ProblemDef> out;
  for (int i = 0; i < count; ++i) {
    for (;;) {  // reroll until the instance is feasible
      ProblemDef p = base_point_problem(numbered("random-spheres", i));
      p.start = Config{0.05, 0.05};
      p.goals = {Config{0.95, 0.95}};
      const int n_spheres = 12 + static_cast<int>(rng.uniform_int(8));
      for (int s = 0; s < n_spheres; ++s) {
        Sphere sphere;
        sphere.radius = rng.uniform(0.04, 0.11);
        sphere.center = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
        const double margin = sphere.radius + 0.03;
        if (distance(Config(sphere.center), p.start) < margin) continue;
        if (distance(Config(sphere.center), p.goals.front()) < margin) continue;
        p.env.obstacles.emplace_back(std::move(sphere));
      }
      if (grid_reachable(p)) {
        out.push_back(std::move(p));
        break;
      }
    }
  }
  return out;
}

std::vector<ProblemDef> gen_narrow_passage(int count, Rng& rng) {
  std::vector<ProblemDef> out;
  for (int i = 0; i < count; ++i) {
    ProblemDef p = base_point_problem(numbered("narrow-passage", i));
    const double slot_y = rng.uniform(0.2, 0.7);
    const double slot_w = rng.uniform(0.06, 0.12);
    p.env.obstacles.emplace_back(AxisAlignedBox{{0.47, -1.0}, {0.53, slot_y}});
    p.env.obstacles.emplace_back(AxisAlignedBox{{0.47, slot_y + slot_w}, {0.53, 2.0}});
    p.start = Config{0.1, rng.uniform(0.1, 0.9)};
    p.goals = {Config{0.9, rng.uniform(0.1, 0.9)}};
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ProblemDef> gen_arm_shelf(int count, Rng& rng) {
  std::vector<ProblemDef> out;
  for (int i = 0; i < count; ++i) {
    for (;;) {
      ProblemDef p;
      p.name = numbered("arm-shelf", i);
      PlanarArm arm;
      arm.link_lengths = {0.4, 0.3, 0.2};
      arm.link_radius = 0.02;
      arm.base = {0.0, 0.0};
      p.robot = arm;
      p.bounds.lower = {-kPi, -kPi, -kPi};
      p.bounds.upper = {kPi, kPi, kPi};
      // A shelf to the right of the base: two boards with a slot between.
      const double slot_lo = rng.uniform(0.05, 0.15);
      const double slot_hi = slot_lo + rng.uniform(0.18, 0.26);
      p.env.obstacles.emplace_back(AxisAlignedBox{{0.55, slot_lo - 0.04}, {0.95, slot_lo}});
      p.env.obstacles.emplace_back(AxisAlignedBox{{0.55, slot_hi}, {0.95, slot_hi + 0.04}});
      // Start folded above the shelf, goal reaching into the slot.
      p.start = Config{kPi / 2.0, -kPi / 8.0, -kPi / 8.0};
      const double reach_y = 0.5 * (slot_lo + slot_hi);
      const double goal_angle = std::asin(clamp01(reach_y / 0.9));
      p.goals = {Config{goal_angle, -goal_angle / 2.0, -goal_angle / 2.0}};

      const Validator validator(p.robot, p.env);
      if (!validator.is_valid(p.start.view()) || !validator.is_valid(p.goals.front().view())) {
        continue;
      }
      // Deterministic feasibility probe: an iteration-bounded bidirectional
      // search must connect the two configurations.
      PlannerSettings probe;
      probe.max_batches = 20000;
      probe.seed = 7;
      probe.rrt_range = 0.6;
      if (!rrt_connect(p, probe).solved) continue;
      out.push_back(std::move(p));
      break;
    }
  }
  return out;
}

}  // namespace

ProblemDef make_wall_gap_problem() {
  ProblemDef p = base_point_problem("wall-gap");
  p.env.obstacles.emplace_back(AxisAlignedBox{{0.45, -1.0}, {0.55, 0.8}});
  p.start = Config{0.1, 0.5};
  p.goals = {Config{0.9, 0.5}};
  return p;
}

ProblemDef make_empty_problem(int dim) {
  ProblemDef p;
  p.name = "empty";
  p.bounds.lower.assign(static_cast<std::size_t>(dim), 0.0);
  p.bounds.upper.assign(static_cast<std::size_t>(dim), 1.0);
  p.robot = PointRobot{dim};
  p.start.coords.assign(static_cast<std::size_t>(dim), 0.1);
  Config goal;
  goal.coords.assign(static_cast<std::size_t>(dim), 0.9);
  p.goals = {std::move(goal)};
  return p;
}

std::filesystem::path generate_suite(const std::string& name, const std::filesystem::path& out_dir,
                                     int count, std::uint64_t seed) {
  if (count < 1) throw ContractViolation("generate_suite: count must be >= 1");
  Rng rng(mix64(seed ^ fnv1a64(name)));
  std::vector<ProblemDef> problems;
  if (name == "empty") {
    problems = gen_empty(count, rng);
  } else if (name == "wall-gap") {
    problems = gen_wall_gap(count, rng);
  } else if (name == "random-spheres") {
    problems = gen_random_spheres(count, rng);
  } else if (name == "narrow-passage") {
    problems = gen_narrow_passage(count, rng);
  } else if (name == "arm-shelf") {
    problems = gen_arm_shelf(count, rng);
  } else {
    throw ContractViolation("unknown suite: \"" + name + "\"");
  }

  const auto suite_dir = out_dir / name;
  std::error_code ec;
  std::filesystem::create_directories(suite_dir / "problems", ec);
  if (ec) throw IoError("cannot create suite directory: " + suite_dir.string());

  SuiteManifest manifest;
  manifest.name = name;
  manifest.time_budget_s = 1.0;
  manifest.trials = 5;
  manifest.seed_base = seed;
  for (const ProblemDef& p : problems) {
    const auto path = suite_dir / "problems" / (p.name + ".json");
    save_problem(p, path);
    manifest.problem_paths.push_back(path);
  }
  const auto manifest_path = suite_dir / "manifest.json";
  save_manifest(manifest, manifest_path);
  return manifest_path;
}

}  // namespace fcit
