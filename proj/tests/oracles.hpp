#ifndef FCIT_TESTS_ORACLES_HPP
#define FCIT_TESTS_ORACLES_HPP

#include <optional>
#include <utility>

#include "fcit/problem.hpp"
#include "fcit/sample_store.hpp"
#include "fcit/validator.hpp"

// Independent reference computations for the test suites. Everything here
// stays implementation-agnostic: plain Dijkstra, direct tail sums, brute
// scans. Test expectations are frozen from these, never from the library.
namespace fcit::oracles {

/// Shortest-path cost from start to the cheapest goal over the complete
/// graph on the store's samples, with edges screened by the same motion
/// validator the planner uses. With a radius, edges longer than it are
/// dropped (the r-disc subgraph).
double graph_dijkstra(const SampleStore& store, const Validator& validator, double resolution,
                      SampleId start, const GoalSet& goals,
                      std::optional<double> radius = std::nullopt);

/// Geodesic approximation for 2-D point worlds: Dijkstra over a uniform
/// grid of the given cell size with straight moves up to `reach` cells away
/// (coprime offsets), each move checked against the grid validity bitmap.
double grid_geodesic(const ProblemDef& problem, double cell = 1e-3, int reach = 4);

/// Exact binomial interval found by bisecting directly on the binomial tail
/// sums, with no beta-function machinery.
std::pair<double, double> clopper_pearson_tail_sums(long long k, long long n, double alpha);

/// Binomial(n, 1/2) coverage of the 1-based order-statistic rank pair (l,u).
double median_rank_coverage(int n, int l, int u);

}  // namespace fcit::oracles

#endif  // FCIT_TESTS_ORACLES_HPP
