#ifndef FCIT_ROBOT_HPP
#define FCIT_ROBOT_HPP

#include <array>
#include <variant>
#include <vector>

#include "fcit/config.hpp"

namespace fcit {

/// Point robot moving in its own workspace: config dimension == workspace
/// dimension (2 or 3).
struct PointRobot {
  int dim = 2;
};

/// Planar revolute chain: k links of fixed length, each modelled as a
/// capsule of link_radius around its centerline, anchored at base. Joint i
/// adds its angle to the running orientation.
struct PlanarArm {
  std::vector<double> link_lengths;
  double link_radius = 0.0;
  std::array<double, 2> base{0.0, 0.0};

  int joints() const { return static_cast<int>(link_lengths.size()); }
};

using RobotModel = std::variant<PointRobot, PlanarArm>;

int config_dim(const RobotModel& model);
int workspace_dim(const RobotModel& model);
void validate_model(const RobotModel& model);

struct LinkSegment {
  double ax, ay, bx, by;
  double radius;
};

/// Joint positions of the chain at configuration q: base first, then one
/// point per link end, with cumulative angles.
std::vector<std::array<double, 2>> arm_joint_positions(const PlanarArm& arm, std::span<const double> q);

/// Workspace segments of the arm's links at q, one per link, each carrying
/// the link radius. Throws ContractViolation for a point robot.
std::vector<LinkSegment> forward_kinematics(const RobotModel& model, const Config& q);

}  // namespace fcit

#endif  // FCIT_ROBOT_HPP
