#pragma once

// Parameterized upper-body model: two 3-DOF arms (shoulder pitch, shoulder
// roll, elbow pitch) with closed-form inverse kinematics.
//
// Torso frame: x forward, y left, z up (meters). At zero angles an arm hangs
// straight down. Shoulder roll rotates the arm plane about x; shoulder pitch
// and elbow pitch share the in-plane axis, so pitch raises the arm forward and
// elbow flexion bends the forearm forward/up.

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "gestc/types.hpp"

namespace gestc {

class RobotModelError : public Error {
 public:
  using Error::Error;
};

struct JointLimits {
  double min = 0.0;
  double max = 0.0;
  double clamp(double q) const { return q < min ? min : (q > max ? max : q); }
  bool contains(double q) const { return q >= min && q <= max; }
};

struct ArmAngles {
  double shoulder_pitch = 0.0;
  double shoulder_roll = 0.0;
  double elbow_pitch = 0.0;
};

struct ArmModel {
  double upper_arm_len = 0.25;
  double forearm_len = 0.25;
  Eigen::Vector3d shoulder = Eigen::Vector3d::Zero();
  JointLimits shoulder_pitch{-1.0, 3.0};
  JointLimits shoulder_roll{-1.6, 1.6};
  JointLimits elbow_pitch{0.0, 2.6};
  ArmAngles rest{0.3, 0.0, 1.2};

  double reach() const { return upper_arm_len + forearm_len; }
};

struct RobotModel {
  ArmModel left;
  ArmModel right;

  /// Symmetric desk-scale model with 0.25 m links.
  static RobotModel default_model();

  /// Throws RobotModelError unless links are positive and limits/rest valid.
  void validate() const;
};

/// Reads {"arms": {"left": {...}, "right": {...}}}; see README for fields.
RobotModel load_robot_model(std::istream& source);
std::string serialize_robot_model(const RobotModel& model);

/// Joint order of every trajectory.
inline constexpr std::array<std::string_view, 6> kJointNames = {
    "left_shoulder_pitch",  "left_shoulder_roll",  "left_elbow_pitch",
    "right_shoulder_pitch", "right_shoulder_roll", "right_elbow_pitch"};

using JointVector = std::array<double, 6>;

JointVector rest_joint_vector(const RobotModel& model);

/// Wrist position in the torso frame.
Eigen::Vector3d forward_kinematics(const ArmModel& arm, const ArmAngles& q);

struct IkSolution {
  ArmAngles angles;
  /// Target actually solved for, after radial reach clamping (torso frame).
  Eigen::Vector3d solved_target;
  bool reach_clamped = false;
  bool limit_clamped = false;
};

/// Closed-form IK. Targets farther than 0.98 (l1 + l2) from the shoulder (or
/// nearer than |l1 - l2|) are clamped radially; angles are then clamped into
/// joint limits and `limit_clamped` is set if any moved. Throws
/// RobotModelError (DegenerateModel) when l1 + l2 == 0.
IkSolution solve_arm_ik(const ArmModel& arm, const Eigen::Vector3d& target);

inline constexpr double kReachFraction = 0.98;

}  // namespace gestc
