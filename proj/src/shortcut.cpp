#include "fcit/shortcut.hpp"

#include <cmath>

namespace fcit {

namespace {

struct PathPoint {
  std::size_t segment;  // point lies on path[segment] -> path[segment + 1]
  Config config;
};

PathPoint locate(const std::vector<Config>& path, const std::vector<double>& cumulative, double s) {
  std::size_t seg = 0;
  while (seg + 2 < cumulative.size() && cumulative[seg + 1] <= s) ++seg;
  const double len = cumulative[seg + 1] - cumulative[seg];
  const double t = len > 0.0 ? clamp01((s - cumulative[seg]) / len) : 0.0;
  return {seg, interpolate(path[seg], path[seg + 1], t)};
}

}  // namespace

std::vector<Config> shortcut(const std::vector<Config>& path, const Validator& validator, Rng& rng,
                             int iterations, double resolution, Counters* counters) {
  if (iterations < 0) throw ContractViolation("shortcut: iterations must be >= 0");
  std::vector<Config> current = path;
  if (current.size() < 3) return current;

  for (int iter = 0; iter < iterations; ++iter) {
    std::vector<double> cumulative(current.size(), 0.0);
    for (std::size_t i = 1; i < current.size(); ++i) {
      cumulative[i] = cumulative[i - 1] + distance(current[i - 1], current[i]);
    }
    const double total = cumulative.back();
    if (!(total > 0.0)) break;

    double s1 = rng.uniform(0.0, total);
    double s2 = rng.uniform(0.0, total);
    if (s1 > s2) std::swap(s1, s2);
    const PathPoint p1 = locate(current, cumulative, s1);
    const PathPoint p2 = locate(current, cumulative, s2);
    if (p1.segment == p2.segment) continue;

    // The splice also re-checks the two flanking partial segments: their
    // fresh discretization grids differ from the parents' and every
    // consecutive pair of the output must validate on its own.
    bool ok = true;
    for (const auto& [from, to] :
         {std::pair{current[p1.segment].view(), p1.config.view()},
          std::pair{p1.config.view(), p2.config.view()},
          std::pair{p2.config.view(), current[p2.segment + 1].view()}}) {
      const auto check = validator.check_motion(from, to, resolution);
      if (counters) {
        ++counters->edges_validated;
        counters->states_checked += check.states_checked;
      }
      if (!check.valid) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    std::vector<Config> next;
    next.reserve(current.size());
    next.insert(next.end(), current.begin(), current.begin() + static_cast<std::ptrdiff_t>(p1.segment) + 1);
    next.push_back(p1.config);
    next.push_back(p2.config);
    next.insert(next.end(), current.begin() + static_cast<std::ptrdiff_t>(p2.segment) + 1, current.end());
    current = std::move(next);
  }
  return current;
}

}  // namespace fcit
