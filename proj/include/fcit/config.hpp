#ifndef FCIT_CONFIG_HPP
#define FCIT_CONFIG_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "fcit/errors.hpp"

namespace fcit {

using SampleId = std::int32_t;
inline constexpr SampleId kNoSample = -1;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// One state in configuration space: d real coordinates (radians for joint
/// spaces, length units for point robots).
struct Config {
  std::vector<double> coords;

  Config() = default;
  explicit Config(std::vector<double> c) : coords(std::move(c)) {}
  Config(std::initializer_list<double> c) : coords(c) {}

  int dim() const { return static_cast<int>(coords.size()); }
  double& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  std::span<const double> view() const { return coords; }

  friend bool operator==(const Config& a, const Config& b) { return a.coords == b.coords; }
};

/// Axis-aligned sampling bounds; lower[i] < upper[i] for all i.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  int dim() const { return static_cast<int>(lower.size()); }
  void validate() const;
  /// Longest straight segment that fits in the bounds.
  double diameter() const;
  bool contains(std::span<const double> q) const;
};

/// Euclidean configuration-space distance. Implements both the true edge
/// cost and its admissible estimate: for a straight valid segment the two
/// coincide.
double distance(std::span<const double> a, std::span<const double> b);
inline double distance(const Config& a, const Config& b) { return distance(a.view(), b.view()); }

/// a + t * (b - a); exact at both endpoints.
Config interpolate(const Config& a, const Config& b, double t);

}  // namespace fcit

#endif  // FCIT_CONFIG_HPP
