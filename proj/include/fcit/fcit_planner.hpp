#ifndef FCIT_FCIT_PLANNER_HPP
#define FCIT_FCIT_PLANNER_HPP

#include <chrono>
#include <functional>

#include "fcit/edge_queues.hpp"
#include "fcit/problem.hpp"

namespace fcit {

/// Optional instrumentation for tests and the acceptance suite.
struct FcitHooks {
  /// Called for every open-queue pop with the popped (parent, child).
  std::function<void(SampleId, SampleId)> on_pop;
  /// Called whenever a motion is actually validated (cache misses only).
  std::function<void(SampleId, SampleId)> on_validate;
  /// Called after each batch's search finishes, before new samples arrive.
  std::function<void(const class FcitPlanner&)> on_batch_end;
  /// Re-verify queue-size and cache-symmetry invariants after every
  /// mutation; throws ContractViolation on the first violation.
  bool paranoid_checks = false;
};

/// Anytime planner over a fully connected (or radius-limited) sample graph.
///
/// Each batch restarts an informed edge search over the enlarged sample
/// store: the start's local queue is rebuilt, the open queue is seeded with
/// the start's best edge, and edges pop in order of estimated solution cost.
/// A popped tree edge re-expands its child (rebuilding the child's local
/// queue over the full store); any other edge runs the admissible cascade
/// and commits by rewiring or inserting its child. Edges proven in collision
/// are cached symmetrically and never revalidated; neither are edges proven
/// valid. When the cheapest open edge cannot beat the incumbent solution the
/// open queue is dropped, the batch ends, and a new batch of samples is
/// drawn.
///
/// The incumbent goal cost is available at any time and never increases.
class FcitPlanner {
 public:
  FcitPlanner(const ProblemDef& problem, const PlannerSettings& settings, FcitHooks hooks = {});

  /// Runs batches until the settings' termination criterion fires.
  PlanResult plan();

  // Stepwise driving, used by the oracle tests.
  void run_batch_search();
  bool add_samples();  // false once sampling starves
  bool done() const;

  double incumbent() const { return incumbent_; }
  const SampleStore& store() const { return store_; }
  const SearchTree& tree() const { return tree_; }
  const GoalSet& goals() const { return goals_; }
  const Counters& counters() const { return counters_; }
  const PairSet& invalid_edges() const { return invalid_; }
  std::size_t open_size() const { return open_.size(); }
  const Validator& validator() const { return validator_; }

  PlanResult make_result() const;

 private:
  void expand(SampleId v);
  void process_edge(const Edge& e);
  void update_incumbent();
  void check_invariants() const;
  double elapsed_ms() const;

  PlannerSettings settings_;
  FcitHooks hooks_;
  Validator validator_;
  Bounds bounds_;
  SampleStore store_;
  GoalSet goals_;
  SampleId start_id_;
  std::vector<double> hhat_;
  SamplerState sampler_;
  SearchTree tree_;
  OpenQueue open_;
  std::vector<LocalQueue> local_;
  PairSet invalid_;
  PairSet validated_;
  double incumbent_ = kInf;
  Counters counters_;
  std::vector<TraceEvent> trace_;
  bool timed_out_ = false;
  bool starved_ = false;
  std::string note_;
  std::chrono::steady_clock::time_point start_time_;
};

/// Fully connected mode (ignores settings.rdisc_radius).
PlanResult fcit_plan(const ProblemDef& problem, const PlannerSettings& settings);

/// r-disc ablation: identical search over candidate edges no longer than
/// settings.rdisc_radius.
PlanResult fcit_plan_rdisc(const ProblemDef& problem, const PlannerSettings& settings);

}  // namespace fcit

#endif  // FCIT_FCIT_PLANNER_HPP
