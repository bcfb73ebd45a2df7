#pragma once

// Gesture synthesis: phase scheduling against word timing, affect scaling of
// template keyframes, retargeting onto the robot model and minimum-jerk
// trajectory sampling.

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gestc/planner.hpp"
#include "gestc/robot.hpp"
#include "gestc/templates.hpp"
#include "gestc/timing.hpp"

namespace gestc {

class SynthesisError : public Error {
 public:
  using Error::Error;
};

struct Interval {
  double start_s = 0.0;
  double end_s = 0.0;
  double duration() const { return end_s - start_s; }
};

struct PhasedPlan {
  Interval prep;
  Interval stroke;
  Interval retract;
  WordTiming anchor;
};

struct SentenceBounds {
  double start_s = 0.0;  // first spoken word start
  double end_s = 0.0;    // last spoken word end
  double pause_s = 0.0;  // retraction may run this far past end_s
};

inline constexpr double kMinStrokeSource_s = 0.2;
inline constexpr double kMaxStrokeSource_s = 1.2;
inline constexpr double kPrepRatio = 0.4;
inline constexpr double kRetractRatio = 0.6;

/// Stroke starts on the anchor word and lasts clamp(word, 0.2, 1.2) / speed.
/// Preparation (0.4x stroke) is compressed so it never starts before the
/// sentence; retraction (0.6x stroke) is truncated at end_s + pause_s.
PhasedPlan schedule_phases(const WordTiming& anchor, const GestureParams& params,
                           const SentenceBounds& bounds);

struct RestPoints {
  Point3 left;
  Point3 right;
};

struct ScaledKeyframe {
  double phase = 0.0;
  Point3 left_wrist{};
  Point3 right_wrist{};
  double hand_aperture = 0.0;
};

/// p' = r + amplitude (p - r) + (0, bias, 0), clamped to the cube, for each
/// active wrist. The idle wrist of a one-handed template stays at rest.
std::vector<ScaledKeyframe> apply_params(const GestureTemplate& tmpl, const GestureParams& params,
                                         const RestPoints& rest);

/// Affine map from the gesture cube to an arm's reach box: centered half a
/// reach in front of the shoulder, half-extent 0.4 (l1 + l2).
Eigen::Vector3d gesture_to_torso(const ArmModel& arm, const Point3& g);
Point3 torso_to_gesture(const ArmModel& arm, const Eigen::Vector3d& p);

/// Rest-pose wrist positions expressed in (and clamped to) the gesture cube.
RestPoints gesture_rest_points(const RobotModel& model);

struct RetargetedKeyframe {
  double phase = 0.0;
  JointVector angles{};
  double hand_aperture = 0.0;
  bool reach_clamped = false;
  bool limit_clamped = false;
};

/// IK per active arm per keyframe; idle arms keep their rest angles.
std::vector<RetargetedKeyframe> retarget(std::span<const ScaledKeyframe> keyframes,
                                         Handedness handedness, const RobotModel& model);

struct TrajectoryPoint {
  double t_s = 0.0;
  JointVector positions{};
};

struct JointTrajectory {
  std::vector<std::string> joint_names;
  std::vector<TrajectoryPoint> points;
};

/// 10 s^3 - 15 s^4 + 6 s^5.
double min_jerk_blend(double s);
/// Exact at both endpoints.
double min_jerk(double q0, double q1, double s);

/// Rest -> keyframe 0 over prep, keyframe to keyframe across the stroke at
/// their phase fractions, last keyframe -> rest over retract. Samples on a
/// uniform grid from prep start plus every segment endpoint. Zero-length
/// phases contribute no segment.
JointTrajectory interpolate(std::span<const RetargetedKeyframe> keyframes, const JointVector& rest,
                            const PhasedPlan& phases, double sample_rate_hz);

}  // namespace gestc
