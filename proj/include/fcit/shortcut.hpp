#ifndef FCIT_SHORTCUT_HPP
#define FCIT_SHORTCUT_HPP

#include <vector>

#include "fcit/problem.hpp"

namespace fcit {

/// Randomized shortcutting: repeatedly picks two points along the path by
/// arc length and splices in the straight segment between them when it
/// validates. Never increases cost; the result still validates at the same
/// resolution. Zero iterations returns the input unchanged.
std::vector<Config> shortcut(const std::vector<Config>& path, const Validator& validator, Rng& rng,
                             int iterations, double resolution, Counters* counters = nullptr);

}  // namespace fcit

#endif  // FCIT_SHORTCUT_HPP
