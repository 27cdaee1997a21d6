#ifndef FCIT_RRT_HPP
#define FCIT_RRT_HPP

#include "fcit/problem.hpp"

namespace fcit {

/// Bidirectional extend/connect search. Returns the first path found,
/// post-processed by randomized shortcutting; not asymptotically optimal,
/// so the trace carries a single event. Uses the first goal when several
/// are given.
PlanResult rrt_connect(const ProblemDef& problem, const PlannerSettings& settings);

/// Standard anytime rewiring tree with the shrinking-ball neighborhood
/// radius scaled by settings.rewire_factor; trace costs strictly decrease.
PlanResult rrt_star(const ProblemDef& problem, const PlannerSettings& settings);

}  // namespace fcit

#endif  // FCIT_RRT_HPP
