#include "gestc/robot.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>

#include "json.hpp"

namespace gestc {

namespace {

using nlohmann::json;

// Sagittal-plane direction of a link at angle phi measured from straight down
// toward forward: (x, z) = (sin phi, -cos phi).
Eigen::Vector2d link_dir(double phi) { return {std::sin(phi), -std::cos(phi)}; }

void check_limits(const JointLimits& l, double rest, const std::string& name) {
  if (!std::isfinite(l.min) || !std::isfinite(l.max) || !(l.min < l.max))
    throw RobotModelError("joint '" + name + "': min must be < max");
  if (!std::isfinite(rest) || !l.contains(rest))
    throw RobotModelError("joint '" + name + "': rest angle outside limits");
}

void check_arm(const ArmModel& arm, const std::string& side) {
  if (!(arm.upper_arm_len > 0.0) || !(arm.forearm_len > 0.0) || !std::isfinite(arm.reach()))
    throw RobotModelError(side + " arm: link lengths must be positive");
  if (!arm.shoulder.allFinite()) throw RobotModelError(side + " arm: shoulder position not finite");
  check_limits(arm.shoulder_pitch, arm.rest.shoulder_pitch, side + "_shoulder_pitch");
  check_limits(arm.shoulder_roll, arm.rest.shoulder_roll, side + "_shoulder_roll");
  check_limits(arm.elbow_pitch, arm.rest.elbow_pitch, side + "_elbow_pitch");
}

double number(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number())
    throw RobotModelError(std::string("robot model: missing numeric field '") + key + "'");
  return obj.at(key).get<double>();
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw RobotModelError(std::string("robot model: missing field '") + key + "'");
  return obj.at(key);
}

ArmModel parse_arm(const json& j) {
  ArmModel arm;
  arm.upper_arm_len = number(j, "upper_arm_len");
  arm.forearm_len = number(j, "forearm_len");
  const json& sh = member(j, "shoulder");
  if (!sh.is_array() || sh.size() != 3)
    throw RobotModelError("robot model: shoulder must be [x, y, z]");
  for (int i = 0; i < 3; ++i) {
    if (!sh[i].is_number()) throw RobotModelError("robot model: shoulder must be numeric");
    arm.shoulder[i] = sh[i].get<double>();
  }
  const json& joints = member(j, "joints");
  auto joint = [&](const char* name, JointLimits& lim, double& rest) {
    const json& jj = member(joints, name);
    lim = {number(jj, "min"), number(jj, "max")};
    rest = number(jj, "rest");
  };
  joint("shoulder_pitch", arm.shoulder_pitch, arm.rest.shoulder_pitch);
  joint("shoulder_roll", arm.shoulder_roll, arm.rest.shoulder_roll);
  joint("elbow_pitch", arm.elbow_pitch, arm.rest.elbow_pitch);
  return arm;
}

nlohmann::ordered_json arm_json(const ArmModel& arm) {
  auto joint = [](const JointLimits& l, double rest) {
    return nlohmann::ordered_json{{"min", l.min}, {"max", l.max}, {"rest", rest}};
  };
  nlohmann::ordered_json j;
  j["upper_arm_len"] = arm.upper_arm_len;
  j["forearm_len"] = arm.forearm_len;
  j["shoulder"] = {arm.shoulder.x(), arm.shoulder.y(), arm.shoulder.z()};
  j["joints"]["shoulder_pitch"] = joint(arm.shoulder_pitch, arm.rest.shoulder_pitch);
  j["joints"]["shoulder_roll"] = joint(arm.shoulder_roll, arm.rest.shoulder_roll);
  j["joints"]["elbow_pitch"] = joint(arm.elbow_pitch, arm.rest.elbow_pitch);
  return j;
}

}  // namespace

RobotModel RobotModel::default_model() {
  RobotModel m;
  m.left.shoulder = {0.0, 0.15, 0.0};
  m.left.shoulder_roll = {-1.6, 1.6};
  m.left.rest = {0.3, 0.1, 1.2};
  m.right.shoulder = {0.0, -0.15, 0.0};
  m.right.shoulder_roll = {-1.6, 1.6};
  m.right.rest = {0.3, -0.1, 1.2};
  return m;
}

void RobotModel::validate() const {
  check_arm(left, "left");
  check_arm(right, "right");
}

RobotModel load_robot_model(std::istream& source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw RobotModelError(std::string("robot model: ") + e.what());
  }
  const json& arms = member(doc, "arms");
  RobotModel m;
  m.left = parse_arm(member(arms, "left"));
  m.right = parse_arm(member(arms, "right"));
  m.validate();
  return m;
}

std::string serialize_robot_model(const RobotModel& model) {
  nlohmann::ordered_json doc;
  doc["arms"]["left"] = arm_json(model.left);
  doc["arms"]["right"] = arm_json(model.right);
  return doc.dump(2) + "\n";
}

JointVector rest_joint_vector(const RobotModel& m) {
  return {m.left.rest.shoulder_pitch,  m.left.rest.shoulder_roll,  m.left.rest.elbow_pitch,
          m.right.rest.shoulder_pitch, m.right.rest.shoulder_roll, m.right.rest.elbow_pitch};
}

Eigen::Vector3d forward_kinematics(const ArmModel& arm, const ArmAngles& q) {
  const Eigen::Vector2d planar = arm.upper_arm_len * link_dir(q.shoulder_pitch) +
                                 arm.forearm_len * link_dir(q.shoulder_pitch + q.elbow_pitch);
  // Roll about the torso x axis carries the sagittal (x, z) plane.
  const double s = std::sin(q.shoulder_roll), c = std::cos(q.shoulder_roll);
  return arm.shoulder + Eigen::Vector3d(planar.x(), -s * planar.y(), c * planar.y());
}

IkSolution solve_arm_ik(const ArmModel& arm, const Eigen::Vector3d& target) {
  const double l1 = arm.upper_arm_len, l2 = arm.forearm_len;
  if (l1 + l2 == 0.0) throw RobotModelError("degenerate robot model: zero arm length");

  IkSolution sol;
  Eigen::Vector3d rel = target - arm.shoulder;
  const double r_max = kReachFraction * (l1 + l2);
  const double r_min = std::abs(l1 - l2);
  double d = rel.norm();
  if (d > r_max || d < r_min) {
    const double clamped = d > r_max ? r_max : r_min;
    rel = d > 0.0 ? Eigen::Vector3d(rel * (clamped / d)) : Eigen::Vector3d(0.0, 0.0, -clamped);
    d = clamped;
    sol.reach_clamped = true;
  }
  sol.solved_target = arm.shoulder + rel;

  // Arm plane: roll so the target lies in the rotated sagittal plane. Of the
  // two roll solutions keep the one within [-pi/2, pi/2].
  const double rho = std::hypot(rel.y(), rel.z());
  double roll = 0.0, planar_z = 0.0;
  if (rho > 0.0) {
    if (-rel.z() >= 0.0) {
      roll = std::atan2(rel.y(), -rel.z());
      planar_z = -rho;
    } else {
      roll = std::atan2(-rel.y(), rel.z());
      planar_z = rho;
    }
  }

  // A zero-length link leaves the elbow without effect.
  double cos_elbow = 1.0;
  if (l1 * l2 > 0.0) cos_elbow = std::clamp((d * d - l1 * l1 - l2 * l2) / (2.0 * l1 * l2), -1.0, 1.0);
  const double elbow = std::acos(cos_elbow);
  const double direction = std::atan2(rel.x(), -planar_z);
  const double offset = std::atan2(l2 * std::sin(elbow), l1 + l2 * std::cos(elbow));
  const double pitch = direction - offset;

  sol.angles = {arm.shoulder_pitch.clamp(pitch), arm.shoulder_roll.clamp(roll),
                arm.elbow_pitch.clamp(elbow)};
  sol.limit_clamped = sol.angles.shoulder_pitch != pitch || sol.angles.shoulder_roll != roll ||
                      sol.angles.elbow_pitch != elbow;
  return sol;
}

}  // namespace gestc
