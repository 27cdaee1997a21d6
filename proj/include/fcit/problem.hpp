#ifndef FCIT_PROBLEM_HPP
#define FCIT_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "fcit/config.hpp"
#include "fcit/geometry.hpp"
#include "fcit/robot.hpp"
#include "fcit/rng.hpp"
#include "fcit/sampling.hpp"
#include "fcit/validator.hpp"

namespace fcit {

/// A complete planning instance. Start and every goal must validate against
/// the environment; path cost is Euclidean configuration-space arc length.
struct ProblemDef {
  std::string name;
  Bounds bounds;
  RobotModel robot;
  Environment env;
  Config start;
  std::vector<Config> goals;

  /// Throws SemanticError naming the offending field.
  void validate() const;
};

/// All planner knobs. Exactly one of time_budget_s, max_batches and
/// target_cost must be set; it is the termination ("done") criterion.
struct PlannerSettings {
  int batch_size = 100;
  std::optional<double> time_budget_s;
  std::optional<int> max_batches;
  std::optional<double> target_cost;

  double resolution = kDefaultResolution;
  int block_width = kDefaultBlockWidth;
  SamplerKind sampler = SamplerKind::kPseudorandom;
  std::uint64_t seed = 0;
  int rejection_budget_per_sample = kDefaultRejectionBudgetPerSample;

  /// Connection radius for the r-disc ablation; fully connected when unset.
  std::optional<double> rdisc_radius;

  // Baseline knobs.
  double rrt_range = 0.5;
  double rrt_goal_bias = 0.05;
  double rewire_factor = 1.1;
  int shortcut_iterations = 100;

  void validate() const;
};

struct TraceEvent {
  double t_ms;
  double cost;
};

struct Counters {
  long long edges_validated = 0;
  long long states_checked = 0;
  long long batches = 0;
  long long queue_pops = 0;

  friend bool operator==(const Counters&, const Counters&) = default;
};

/// Outcome of one planner run. When solved, the path runs start to goal,
/// every consecutive pair revalidates, and cost is the sum of segment
/// distances. Trace costs are strictly decreasing.
struct PlanResult {
  bool solved = false;
  std::vector<Config> path;
  double cost = kInf;
  double initial_time_ms = kInf;
  double initial_cost = kInf;
  double final_time_ms = kInf;
  std::vector<TraceEvent> trace;
  Counters counters;
  /// Non-empty when the run ended abnormally (e.g. sampling starved).
  std::string note;
};

double path_cost(const std::vector<Config>& path);

}  // namespace fcit

#endif  // FCIT_PROBLEM_HPP
