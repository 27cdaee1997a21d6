#include "fcit/fcit_planner.hpp"

#include <algorithm>

namespace fcit {

FcitPlanner::FcitPlanner(const ProblemDef& problem, const PlannerSettings& settings, FcitHooks hooks)
    : settings_(settings),
      hooks_(std::move(hooks)),
      validator_(problem.robot, problem.env, settings.block_width),
      bounds_(problem.bounds),
      store_(config_dim(problem.robot), settings.block_width),
      start_id_(kNoSample),
      sampler_(settings.sampler, settings.seed, config_dim(problem.robot)),
      tree_(0) {
  settings_.validate();
  problem.validate();

  // Store layout: start at id 0, goals next, samples after.
  start_id_ = store_.append(problem.start);
  for (const Config& goal : problem.goals) {
    goals_.ids.push_back(store_.append(goal));
  }
  hhat_.resize(static_cast<std::size_t>(store_.size()));
  std::vector<double> buf(static_cast<std::size_t>(store_.dim()));
  for (SampleId id = 0; id < store_.size(); ++id) {
    store_.copy_config(id, buf);
    hhat_[static_cast<std::size_t>(id)] = heuristic_cost_to_go(buf, goals_, store_);
  }
  tree_.ensure_capacity(store_.size());
  local_.resize(static_cast<std::size_t>(store_.size()));
  start_time_ = std::chrono::steady_clock::now();
}

double FcitPlanner::elapsed_ms() const {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time_)
      .count();
}

bool FcitPlanner::done() const {
  if (starved_) return true;
  if (settings_.max_batches) return counters_.batches >= *settings_.max_batches;
  if (settings_.target_cost) return incumbent_ <= *settings_.target_cost;
  return timed_out_ || elapsed_ms() >= *settings_.time_budget_s * 1000.0;
}

void FcitPlanner::update_incumbent() {
  double best = kInf;
  for (SampleId g : goals_.ids) {
    best = std::min(best, tree_.g(g));
  }
  if (best < incumbent_) {
    incumbent_ = best;
    trace_.push_back({elapsed_ms(), best});
  }
}

void FcitPlanner::check_invariants() const {
  if (open_.size() > static_cast<std::size_t>(tree_.num_vertices())) {
    throw ContractViolation("fcit: open queue exceeded vertex count");
  }
  if (!invalid_.is_symmetric()) {
    throw ContractViolation("fcit: invalid-edge cache lost symmetry");
  }
}

void FcitPlanner::expand(SampleId v) {
  local_[static_cast<std::size_t>(v)] =
      build_local_queue(v, store_, hhat_, invalid_, settings_.rdisc_radius);
  if (auto e = next_best_edge(local_[static_cast<std::size_t>(v)], tree_, hhat_)) {
    open_.insert_or_replace(*e);
  }
  if (hooks_.paranoid_checks) check_invariants();
}

void FcitPlanner::run_batch_search() {
  tree_.ensure_capacity(store_.size());
  local_.resize(static_cast<std::size_t>(store_.size()));

  open_.clear();
  expand(start_id_);

  while (!open_.empty()) {
    if (settings_.time_budget_s && elapsed_ms() >= *settings_.time_budget_s * 1000.0) {
      timed_out_ = true;
      return;
    }
    const Edge edge = *open_.pop_min(tree_);
    ++counters_.queue_pops;
    if (hooks_.on_pop) hooks_.on_pop(edge.parent, edge.child);
    // The popped parent's slot is refilled from its local queue right away.
    if (auto next = next_best_edge(local_[static_cast<std::size_t>(edge.parent)], tree_, hhat_)) {
      open_.insert_or_replace(*next);
    }
    if (hooks_.paranoid_checks) check_invariants();
    process_edge(edge);
  }
}

void FcitPlanner::process_edge(const Edge& edge) {
  const SampleId xp = edge.parent;
  const SampleId xc = edge.child;

  if (tree_.parent(xc) == xp) {
    // The child's own tree edge: re-expand it over the current store.
    expand(xc);
    return;
  }

  const double f_hat = tree_.g(xp) + edge.chat + edge.hhat;
  if (!(f_hat <= incumbent_)) {
    // Nothing in the queue can improve the solution; end the batch.
    open_.clear();
    return;
  }
  if (!(tree_.g(xp) + edge.chat <= tree_.g(xc))) return;
  if (invalid_.contains(xp, xc)) return;

  bool valid = validated_.contains(xp, xc);
  if (!valid) {
    std::vector<double> qa(static_cast<std::size_t>(store_.dim()));
    std::vector<double> qb(static_cast<std::size_t>(store_.dim()));
    store_.copy_config(xp, qa);
    store_.copy_config(xc, qb);
    if (hooks_.on_validate) hooks_.on_validate(xp, xc);
    const auto check = validator_.check_motion(qa, qb, settings_.resolution);
    ++counters_.edges_validated;
    counters_.states_checked += check.states_checked;
    valid = check.valid;
    if (valid) validated_.insert(xp, xc);
  }
  if (!valid) {
    mark_invalid(invalid_, xp, xc);
    if (hooks_.paranoid_checks) check_invariants();
    return;
  }

  // Straight segments cost exactly their admissible estimate here, so the
  // two exact-cost gates reduce to the estimate-based ones above, except
  // that the final commit is strict to keep equal-cost states from adopting
  // each other.
  const double cost = edge.chat;
  if (!(tree_.g(xp) + cost + edge.hhat <= incumbent_)) return;
  if (!(tree_.g(xp) + cost < tree_.g(xc))) return;

  if (tree_.contains(xc)) {
    const auto affected = tree_.rewire(xp, xc, cost);
    open_.rekey(affected, tree_);
    // A fresh local queue: entries skipped under the old, higher
    // cost-to-come may be viable again, and new samples become reachable.
    expand(xc);
  } else {
    tree_.insert(xc, xp, cost);
    expand(xc);
  }
  update_incumbent();
  if (hooks_.paranoid_checks) check_invariants();
}

bool FcitPlanner::add_samples() {
  try {
    sample_batch(store_, settings_.batch_size, sampler_, validator_, bounds_,
                 settings_.rejection_budget_per_sample, &counters_.states_checked);
  } catch (const SamplingStarved& e) {
    starved_ = true;
    note_ = e.what();
  }
  const auto old = hhat_.size();
  hhat_.resize(static_cast<std::size_t>(store_.size()));
  std::vector<double> buf(static_cast<std::size_t>(store_.dim()));
  for (SampleId id = static_cast<SampleId>(old); id < store_.size(); ++id) {
    store_.copy_config(id, buf);
    hhat_[static_cast<std::size_t>(id)] = heuristic_cost_to_go(buf, goals_, store_);
  }
  tree_.ensure_capacity(store_.size());
  local_.resize(static_cast<std::size_t>(store_.size()));
  return !starved_;
}

PlanResult FcitPlanner::plan() {
  start_time_ = std::chrono::steady_clock::now();
  while (!done()) {
    run_batch_search();
    ++counters_.batches;
    if (hooks_.on_batch_end) hooks_.on_batch_end(*this);
    if (done()) break;
    if (!add_samples()) break;
  }
  return make_result();
}

PlanResult FcitPlanner::make_result() const {
  PlanResult result;
  result.counters = counters_;
  result.trace = trace_;
  result.cost = incumbent_;
  result.solved = incumbent_ < kInf;
  result.note = note_;
  if (!trace_.empty()) {
    result.initial_time_ms = trace_.front().t_ms;
    result.initial_cost = trace_.front().cost;
    result.final_time_ms = trace_.back().t_ms;
  }
  if (result.solved) {
    SampleId best_goal = kNoSample;
    double best = kInf;
    for (SampleId g : goals_.ids) {
      if (tree_.g(g) < best) {
        best = tree_.g(g);
        best_goal = g;
      }
    }
    std::vector<SampleId> chain;
    for (SampleId v = best_goal; v != kNoSample; v = tree_.parent(v)) {
      chain.push_back(v);
    }
    std::reverse(chain.begin(), chain.end());
    result.path.reserve(chain.size());
    for (SampleId v : chain) {
      result.path.push_back(store_.config(v));
    }
  }
  return result;
}

PlanResult fcit_plan(const ProblemDef& problem, const PlannerSettings& settings) {
  PlannerSettings s = settings;
  s.rdisc_radius.reset();
  return FcitPlanner(problem, s).plan();
}

PlanResult fcit_plan_rdisc(const ProblemDef& problem, const PlannerSettings& settings) {
  if (!settings.rdisc_radius) {
    throw ContractViolation("fcit_plan_rdisc: rdisc_radius must be set");
  }
  return FcitPlanner(problem, settings).plan();
}

}  // namespace fcit
