#include "fcit/robot.hpp"

#include <cmath>

namespace fcit {

int config_dim(const RobotModel& model) {
  if (const auto* p = std::get_if<PointRobot>(&model)) return p->dim;
  return std::get<PlanarArm>(model).joints();
}

int workspace_dim(const RobotModel& model) {
  if (const auto* p = std::get_if<PointRobot>(&model)) return p->dim;
  return 2;
}

void validate_model(const RobotModel& model) {
  if (const auto* p = std::get_if<PointRobot>(&model)) {
    if (p->dim != 2 && p->dim != 3) throw ContractViolation("point robot: dimension must be 2 or 3");
    return;
  }
  const auto& arm = std::get<PlanarArm>(model);
  if (arm.joints() < 1) throw ContractViolation("arm: at least one link required");
  for (double len : arm.link_lengths) {
    if (!(len > 0.0)) throw ContractViolation("arm: link lengths must be > 0");
  }
  if (!(arm.link_radius >= 0.0)) throw ContractViolation("arm: link radius must be >= 0");
}

std::vector<std::array<double, 2>> arm_joint_positions(const PlanarArm& arm, std::span<const double> q) {
  if (static_cast<int>(q.size()) != arm.joints()) {
    throw ContractViolation("forward kinematics: configuration dimension mismatch");
  }
  std::vector<std::array<double, 2>> joints(static_cast<std::size_t>(arm.joints()) + 1);
  joints[0] = arm.base;
  double theta = 0.0;
  for (int i = 0; i < arm.joints(); ++i) {
    theta += q[static_cast<std::size_t>(i)];
    const double len = arm.link_lengths[static_cast<std::size_t>(i)];
    joints[static_cast<std::size_t>(i) + 1] = {joints[static_cast<std::size_t>(i)][0] + len * std::cos(theta),
                                               joints[static_cast<std::size_t>(i)][1] + len * std::sin(theta)};
  }
  return joints;
}

std::vector<LinkSegment> forward_kinematics(const RobotModel& model, const Config& q) {
  const auto* arm = std::get_if<PlanarArm>(&model);
  if (arm == nullptr) {
    throw ContractViolation("forward kinematics: point robots have no links");
  }
  const auto joints = arm_joint_positions(*arm, q.view());
  std::vector<LinkSegment> links(static_cast<std::size_t>(arm->joints()));
  for (int i = 0; i < arm->joints(); ++i) {
    links[static_cast<std::size_t>(i)] = {joints[static_cast<std::size_t>(i)][0], joints[static_cast<std::size_t>(i)][1],
                                          joints[static_cast<std::size_t>(i) + 1][0],
                                          joints[static_cast<std::size_t>(i) + 1][1], arm->link_radius};
  }
  return links;
}

}  // namespace fcit
