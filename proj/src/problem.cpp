#include "fcit/problem.hpp"

#include <cmath>

namespace fcit {

void ProblemDef::validate() const {
  try {
    validate_model(robot);
    bounds.validate();
    env.validate(fcit::workspace_dim(robot));
  } catch (const ContractViolation& e) {
    throw SemanticError(name + ": " + e.what());
  }
  const int d = config_dim(robot);
  if (bounds.dim() != d) {
    throw SemanticError(name + ": bounds dimension " + std::to_string(bounds.dim()) +
                        " does not match robot dimension " + std::to_string(d));
  }
  if (start.dim() != d) {
    throw SemanticError(name + ": start dimension " + std::to_string(start.dim()) +
                        " does not match robot dimension " + std::to_string(d));
  }
  if (goals.empty()) throw SemanticError(name + ": at least one goal required");
  for (std::size_t i = 0; i < goals.size(); ++i) {
    if (goals[i].dim() != d) {
      throw SemanticError(name + ": goal " + std::to_string(i) + " dimension mismatch");
    }
  }
  for (double v : start.coords) {
    if (!std::isfinite(v)) throw SemanticError(name + ": start has non-finite coordinate");
  }
  if (!bounds.contains(start.view())) throw SemanticError(name + ": start outside bounds");
  for (std::size_t i = 0; i < goals.size(); ++i) {
    if (!bounds.contains(goals[i].view())) {
      throw SemanticError(name + ": goal " + std::to_string(i) + " outside bounds");
    }
  }
  Validator validator(robot, env);
  if (!validator.is_valid(start.view())) throw SemanticError(name + ": start is in collision");
  for (std::size_t i = 0; i < goals.size(); ++i) {
    if (!validator.is_valid(goals[i].view())) {
      throw SemanticError(name + ": goal " + std::to_string(i) + " is in collision");
    }
  }
}

void PlannerSettings::validate() const {
  const int criteria = (time_budget_s ? 1 : 0) + (max_batches ? 1 : 0) + (target_cost ? 1 : 0);
  if (criteria != 1) {
    throw ContractViolation("settings: exactly one of time budget, max batches, target cost");
  }
  if (time_budget_s && !(*time_budget_s > 0.0)) throw ContractViolation("settings: time budget must be > 0");
  if (max_batches && *max_batches < 1) throw ContractViolation("settings: max batches must be >= 1");
  if (batch_size < 1) throw ContractViolation("settings: batch size must be >= 1");
  if (!(resolution > 0.0)) throw ContractViolation("settings: resolution must be > 0");
  if (!is_power_of_two(block_width) || block_width > 32) {
    throw ContractViolation("settings: block width must be a power of two <= 32");
  }
  if (rdisc_radius && !(*rdisc_radius > 0.0)) throw ContractViolation("settings: radius must be > 0");
  if (!(rrt_range > 0.0)) throw ContractViolation("settings: rrt range must be > 0");
  if (shortcut_iterations < 0) throw ContractViolation("settings: shortcut iterations must be >= 0");
}

double path_cost(const std::vector<Config>& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    total += distance(path[i - 1], path[i]);
  }
  return total;
}

}  // namespace fcit
