#include "fcit/rrt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "fcit/search_tree.hpp"
#include "fcit/shortcut.hpp"

namespace fcit {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool budget_left(const PlannerSettings& s, Clock::time_point start, long long iterations) {
  if (s.max_batches) return iterations < *s.max_batches;
  if (s.target_cost) return true;  // run until the incumbent beats the target
  return elapsed_ms(start) < *s.time_budget_s * 1000.0;
}

struct Steer {
  Config config;
  bool reached;
};

Steer steer(const Config& from, const Config& to, double range) {
  const double d = distance(from, to);
  if (d <= range) return {to, true};
  Config out;
  out.coords.resize(from.coords.size());
  const double t = range / d;
  for (std::size_t i = 0; i < from.coords.size(); ++i) {
    out.coords[i] = from.coords[i] + t * (to.coords[i] - from.coords[i]);
  }
  return {out, false};
}

// Grow-only tree with flat parent links, for the bidirectional search.
struct DirTree {
  std::vector<Config> nodes;
  std::vector<int> parent;

  int add(Config q, int p) {
    nodes.push_back(std::move(q));
    parent.push_back(p);
    return static_cast<int>(nodes.size()) - 1;
  }
  int nearest(const Config& q) const {
    int best = 0;
    double best_d = distance(nodes[0], q);
    for (int i = 1; i < static_cast<int>(nodes.size()); ++i) {
      const double d = distance(nodes[static_cast<std::size_t>(i)], q);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  }
  std::vector<Config> path_to_root(int idx) const {
    std::vector<Config> out;
    for (int v = idx; v != -1; v = parent[static_cast<std::size_t>(v)]) {
      out.push_back(nodes[static_cast<std::size_t>(v)]);
    }
    return out;
  }
};

enum class ExtendStatus { kTrapped, kAdvanced, kReached };

ExtendStatus extend(DirTree& tree, const Config& target, const PlannerSettings& settings,
                    const Validator& validator, Counters& counters, int& new_idx) {
  const int near = tree.nearest(target);
  const Steer s = steer(tree.nodes[static_cast<std::size_t>(near)], target, settings.rrt_range);
  const auto check =
      validator.check_motion(tree.nodes[static_cast<std::size_t>(near)].view(), s.config.view(),
                             settings.resolution);
  ++counters.edges_validated;
  counters.states_checked += check.states_checked;
  if (!check.valid) return ExtendStatus::kTrapped;
  new_idx = tree.add(s.config, near);
  return s.reached ? ExtendStatus::kReached : ExtendStatus::kAdvanced;
}

}  // namespace

PlanResult rrt_connect(const ProblemDef& problem, const PlannerSettings& settings) {
  settings.validate();
  problem.validate();
  Validator validator(problem.robot, problem.env, settings.block_width);
  SamplerState sampler(settings.sampler, settings.seed, config_dim(problem.robot));
  const auto start_time = Clock::now();

  PlanResult result;
  DirTree start_tree;
  start_tree.add(problem.start, -1);
  DirTree goal_tree;
  goal_tree.add(problem.goals.front(), -1);

  DirTree* ta = &start_tree;
  DirTree* tb = &goal_tree;
  Config q_rand;
  q_rand.coords.resize(static_cast<std::size_t>(config_dim(problem.robot)));

  while (budget_left(settings, start_time, result.counters.batches)) {
    ++result.counters.batches;
    sampler.next_candidate(problem.bounds, q_rand.coords);

    int a_new = -1;
    if (extend(*ta, q_rand, settings, validator, result.counters, a_new) == ExtendStatus::kTrapped) {
      std::swap(ta, tb);
      continue;
    }
    const Config& bridge = ta->nodes[static_cast<std::size_t>(a_new)];
    int b_new = -1;
    ExtendStatus status = ExtendStatus::kAdvanced;
    while (status == ExtendStatus::kAdvanced &&
           budget_left(settings, start_time, result.counters.batches)) {
      status = extend(*tb, bridge, settings, validator, result.counters, b_new);
    }
    if (status == ExtendStatus::kReached) {
      // Join: root-to-bridge on the start side, bridge-to-root on the goal side.
      const bool a_is_start = ta == &start_tree;
      std::vector<Config> from_start =
          (a_is_start ? *ta : *tb).path_to_root(a_is_start ? a_new : b_new);
      std::reverse(from_start.begin(), from_start.end());
      std::vector<Config> to_goal = (a_is_start ? *tb : *ta).path_to_root(a_is_start ? b_new : a_new);
      from_start.insert(from_start.end(), to_goal.begin(), to_goal.end());

      Rng shortcut_rng(mix64(settings.seed ^ 0x73686f7274ull));
      result.path = shortcut(from_start, validator, shortcut_rng, settings.shortcut_iterations,
                             settings.resolution, &result.counters);
      result.solved = true;
      result.cost = path_cost(result.path);
      const double t = elapsed_ms(start_time);
      result.initial_time_ms = t;
      result.initial_cost = result.cost;
      result.final_time_ms = t;
      result.trace.push_back({t, result.cost});
      return result;
    }
    std::swap(ta, tb);
  }
  return result;
}

PlanResult rrt_star(const ProblemDef& problem, const PlannerSettings& settings) {
  settings.validate();
  problem.validate();
  Validator validator(problem.robot, problem.env, settings.block_width);
  SamplerState sampler(settings.sampler, settings.seed, config_dim(problem.robot));
  const auto start_time = Clock::now();
  const int d = config_dim(problem.robot);

  PlanResult result;
  SampleStore store(d, settings.block_width);
  const SampleId start_id = store.append(problem.start);
  const SampleId goal_id = store.append(problem.goals.front());
  SearchTree tree(start_id);
  tree.ensure_capacity(store.size());

  // Shrinking-ball constant from the usual density bound over the bounds
  // volume, scaled by the user factor.
  double volume = 1.0;
  for (int c = 0; c < d; ++c) {
    volume *= problem.bounds.upper[static_cast<std::size_t>(c)] -
              problem.bounds.lower[static_cast<std::size_t>(c)];
  }
  const double unit_ball = std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
  const double gamma = settings.rewire_factor * 2.0 *
                       std::pow((1.0 + 1.0 / d) * volume / unit_ball, 1.0 / d);

  double incumbent = kInf;
  Config q_rand;
  q_rand.coords.resize(static_cast<std::size_t>(d));

  auto try_motion = [&](SampleId a, SampleId b) {
    std::vector<double> qa(static_cast<std::size_t>(d));
    std::vector<double> qb(static_cast<std::size_t>(d));
    store.copy_config(a, qa);
    store.copy_config(b, qb);
    const auto check = validator.check_motion(qa, qb, settings.resolution);
    ++result.counters.edges_validated;
    result.counters.states_checked += check.states_checked;
    return check.valid;
  };

  while (budget_left(settings, start_time, result.counters.batches) &&
         !(settings.target_cost && incumbent <= *settings.target_cost)) {
    ++result.counters.batches;
    const bool to_goal = sampler.kind() == SamplerKind::kPseudorandom
                             ? sampler.rng().uniform01() < settings.rrt_goal_bias
                             : result.counters.batches % 20 == 0;
    if (to_goal) {
      store.copy_config(goal_id, q_rand.coords);
    } else {
      sampler.next_candidate(problem.bounds, q_rand.coords);
    }

    // Nearest tree vertex by linear scan; desk-scale stores stay small.
    SampleId nearest = kNoSample;
    double nearest_d = kInf;
    for (SampleId v = 0; v < store.size(); ++v) {
      if (!tree.contains(v)) continue;
      const double dist_v = store.distance_to(v, q_rand.coords);
      if (dist_v < nearest_d) {
        nearest_d = dist_v;
        nearest = v;
      }
    }
    const Steer s = steer(store.config(nearest), q_rand, settings.rrt_range);
    {
      std::vector<double> qn(static_cast<std::size_t>(d));
      store.copy_config(nearest, qn);
      const auto check = validator.check_motion(qn, s.config.view(), settings.resolution);
      ++result.counters.edges_validated;
      result.counters.states_checked += check.states_checked;
      if (!check.valid) continue;
    }

    SampleId q_new;
    if (s.reached && to_goal) {
      // The candidate is the goal itself; reuse its reserved id.
      if (tree.contains(goal_id)) continue;
      q_new = goal_id;
    } else {
      q_new = store.append(s.config);
    }
    tree.ensure_capacity(store.size());

    const long long n = tree.num_vertices() + 1;
    const double radius =
        std::min(settings.rrt_range,
                 gamma * std::pow(std::log(static_cast<double>(n)) / static_cast<double>(n),
                                  1.0 / d));

    // Choose the cheapest valid parent among the neighborhood.
    SampleId best_parent = nearest;
    double best_edge = store.distance(nearest, q_new);
    double best_g = tree.g(nearest) + best_edge;
    for (SampleId v = 0; v < store.size(); ++v) {
      if (!tree.contains(v) || v == nearest || v == q_new) continue;
      const double dist_v = store.distance(v, q_new);
      if (dist_v > radius) continue;
      if (tree.g(v) + dist_v >= best_g) continue;
      if (!try_motion(v, q_new)) continue;
      best_parent = v;
      best_edge = dist_v;
      best_g = tree.g(v) + dist_v;
    }
    tree.insert(q_new, best_parent, best_edge);

    // Rewire the neighborhood through the new vertex.
    for (SampleId v = 0; v < store.size(); ++v) {
      if (!tree.contains(v) || v == q_new || v == tree.root()) continue;
      const double dist_v = store.distance(q_new, v);
      if (dist_v > radius) continue;
      if (!(tree.g(q_new) + dist_v < tree.g(v))) continue;
      if (tree.is_ancestor(v, q_new)) continue;
      if (!try_motion(q_new, v)) continue;
      tree.rewire(q_new, v, dist_v);
    }

    // Goal connection: the goal sits in the store like any other state.
    if (q_new != goal_id && !tree.is_ancestor(goal_id, q_new)) {
      const double dist_goal = store.distance(q_new, goal_id);
      if (dist_goal <= settings.rrt_range && tree.g(q_new) + dist_goal < tree.g(goal_id) &&
          try_motion(q_new, goal_id)) {
        if (tree.contains(goal_id)) {
          tree.rewire(q_new, goal_id, dist_goal);
        } else {
          tree.insert(goal_id, q_new, dist_goal);
        }
      }
    }

    if (tree.g(goal_id) < incumbent) {
      incumbent = tree.g(goal_id);
      result.trace.push_back({elapsed_ms(start_time), incumbent});
    }
  }

  result.solved = incumbent < kInf;
  result.cost = incumbent;
  if (!result.trace.empty()) {
    result.initial_time_ms = result.trace.front().t_ms;
    result.initial_cost = result.trace.front().cost;
    result.final_time_ms = result.trace.back().t_ms;
  }
  if (result.solved) {
    std::vector<SampleId> chain;
    for (SampleId v = goal_id; v != kNoSample; v = tree.parent(v)) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    for (SampleId v : chain) result.path.push_back(store.config(v));
  }
  return result;
}

}  // namespace fcit
