#ifndef FCIT_VALIDATOR_HPP
#define FCIT_VALIDATOR_HPP

#include <cstdint>
#include <memory>

#include "fcit/block.hpp"
#include "fcit/geometry.hpp"
#include "fcit/robot.hpp"

namespace fcit {

inline constexpr double kDefaultResolution = 0.05;

/// Number of interpolated states (both endpoints included) used to check a
/// straight segment of the given length.
int motion_state_count(double dist, double resolution);

/// Collision checker for one (robot, environment) pair. Obstacle geometry is
/// flattened at construction so the scalar and lane-parallel paths share the
/// exact same per-lane arithmetic; their results are bit-identical.
///
/// All methods are const and reentrant.
class Validator : public StateValidity {
 public:
  Validator(RobotModel model, Environment env, int block_width = kDefaultBlockWidth);
  ~Validator() override;

  Validator(const Validator&) = delete;
  Validator& operator=(const Validator&) = delete;

  int config_dim() const;
  int block_width() const;
  const RobotModel& model() const;
  const Environment& environment() const;

  bool is_valid(std::span<const double> q) const override;
  std::uint32_t valid_mask(const ValidationBlock& block) const override;

  struct MotionCheck {
    bool valid;
    long long states_checked;
  };

  /// Validates the straight segment from a to b at the given resolution.
  /// States are visited in bit-reversed index order, grouped into blocks of
  /// the validator width, with an early exit on the first invalid block. The
  /// discretization is direction-symmetric: check_motion(a,b) and
  /// check_motion(b,a) evaluate identical state sets.
  MotionCheck check_motion(std::span<const double> a, std::span<const double> b,
                           double resolution) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Convenience forms matching the module surface; each constructs a
// throwaway validator, so hot paths should hold a Validator instead.
bool validate_state(const RobotModel& model, const Environment& env, const Config& q);
std::uint32_t validate_states_block(const RobotModel& model, const Environment& env,
                                    const ValidationBlock& block);
bool validate_motion(const RobotModel& model, const Environment& env, const Config& a,
                     const Config& b, double resolution = kDefaultResolution);

}  // namespace fcit

#endif  // FCIT_VALIDATOR_HPP
