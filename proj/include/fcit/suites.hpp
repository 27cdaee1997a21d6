#ifndef FCIT_SUITES_HPP
#define FCIT_SUITES_HPP

#include "fcit/bench.hpp"

namespace fcit {

inline const std::vector<std::string> kBuiltinSuites = {"empty", "wall-gap", "random-spheres",
                                                        "narrow-passage", "arm-shelf"};

/// The canonical wall-with-gap world: unit box, a wall at x in [0.45, 0.55]
/// spanning y <= 0.8, start (0.1, 0.5), goal (0.9, 0.5).
ProblemDef make_wall_gap_problem();

/// Open unit-box point problem.
ProblemDef make_empty_problem(int dim = 2);

/// Generates one of the built-in desk-scale suites under out_dir/<name>/:
/// problem files plus a manifest.json wired to them. Every generated
/// problem is feasible and has valid start/goal states. Returns the
/// manifest path.
std::filesystem::path generate_suite(const std::string& name, const std::filesystem::path& out_dir,
                                     int count, std::uint64_t seed);

}  // namespace fcit

#endif  // FCIT_SUITES_HPP
