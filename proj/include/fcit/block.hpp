#ifndef FCIT_BLOCK_HPP
#define FCIT_BLOCK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fcit/config.hpp"

namespace fcit {

inline constexpr int kDefaultBlockWidth = 8;

inline bool is_power_of_two(int w) { return w > 0 && (w & (w - 1)) == 0; }

/// W configurations in structure-of-arrays layout: for each coordinate, the
/// W lane values are contiguous, so one obstacle test can sweep all lanes.
class ValidationBlock {
 public:
  ValidationBlock(int dim, int width);

  int dim() const { return dim_; }
  int width() const { return width_; }
  int occupancy() const { return occupancy_; }
  void clear() { occupancy_ = 0; }

  /// Appends a configuration into the next free lane; returns the lane index.
  int push(std::span<const double> q);

  double coord(int lane, int c) const { return data_[static_cast<std::size_t>(c) * width_ + lane]; }
  /// Contiguous W lane values of coordinate c.
  const double* lane_values(int c) const { return data_.data() + static_cast<std::size_t>(c) * width_; }
  double* lane_values(int c) { return data_.data() + static_cast<std::size_t>(c) * width_; }

  void copy_lane(int lane, std::span<double> out) const;

 private:
  int dim_;
  int width_;
  int occupancy_ = 0;
  std::vector<double> data_;
};

/// State-validity predicate with an optional lane-parallel fast path.
/// The block form must agree bitwise with the scalar form on every lane.
class StateValidity {
 public:
  virtual ~StateValidity() = default;

  virtual bool is_valid(std::span<const double> q) const = 0;

  /// Bit i of the result is set iff lane i holds a valid configuration.
  /// Lanes at or beyond occupancy() are reported as 0.
  virtual std::uint32_t valid_mask(const ValidationBlock& block) const;
};

}  // namespace fcit

#endif  // FCIT_BLOCK_HPP
