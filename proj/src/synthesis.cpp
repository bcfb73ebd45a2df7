#include "gestc/synthesis.hpp"

#include <algorithm>
#include <cmath>

namespace gestc {

namespace {

double clamp_unit_cube(double x) { return std::clamp(x, -1.0, 1.0); }

Point3 scale_point(const Point3& p, const Point3& r, const GestureParams& params) {
  Point3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = r[i] + params.amplitude_factor * (p[i] - r[i]);
  out[1] += params.vertical_bias;
  for (auto& c : out) c = clamp_unit_cube(c);
  return out;
}

Eigen::Vector3d reach_center(const ArmModel& arm) {
  return arm.shoulder + Eigen::Vector3d(0.5 * arm.reach(), 0.0, 0.0);
}

double half_extent(const ArmModel& arm) { return 0.8 * arm.reach() * 0.5; }

struct Segment {
  double t0, t1;
  JointVector q0, q1;
};

}  // namespace

PhasedPlan schedule_phases(const WordTiming& anchor, const GestureParams& params,
                           const SentenceBounds& bounds) {
  PhasedPlan plan;
  plan.anchor = anchor;
  const double stroke =
      std::clamp(anchor.duration_s, kMinStrokeSource_s, kMaxStrokeSource_s) / params.speed_factor;
  plan.stroke = {anchor.start_s, anchor.start_s + stroke};

  const double prep_start = std::max(anchor.start_s - kPrepRatio * stroke, bounds.start_s);
  plan.prep = {std::min(prep_start, anchor.start_s), anchor.start_s};

  const double limit = bounds.end_s + bounds.pause_s;
  const double retract_end = std::min(plan.stroke.end_s + kRetractRatio * stroke, limit);
  plan.retract = {plan.stroke.end_s, std::max(retract_end, plan.stroke.end_s)};
  return plan;
}

std::vector<ScaledKeyframe> apply_params(const GestureTemplate& tmpl, const GestureParams& params,
                                         const RestPoints& rest) {
  std::vector<ScaledKeyframe> out;
  out.reserve(tmpl.keyframes.size());
  for (const auto& k : tmpl.keyframes) {
    ScaledKeyframe s;
    s.phase = k.phase;
    s.hand_aperture = k.hand_aperture;
    s.left_wrist = tmpl.uses_left() ? scale_point(k.left_wrist, rest.left, params) : rest.left;
    s.right_wrist = tmpl.uses_right() ? scale_point(k.right_wrist, rest.right, params) : rest.right;
    out.push_back(s);
  }
  return out;
}

Eigen::Vector3d gesture_to_torso(const ArmModel& arm, const Point3& g) {
  // gesture (x right, y up, z forward) -> torso (x forward, y left, z up)
  return reach_center(arm) + half_extent(arm) * Eigen::Vector3d(g[2], -g[0], g[1]);
}

Point3 torso_to_gesture(const ArmModel& arm, const Eigen::Vector3d& p) {
  const Eigen::Vector3d local = (p - reach_center(arm)) / half_extent(arm);
  return {-local.y(), local.z(), local.x()};
}

RestPoints gesture_rest_points(const RobotModel& model) {
  auto rest_point = [](const ArmModel& arm) {
    Point3 g = torso_to_gesture(arm, forward_kinematics(arm, arm.rest));
    for (auto& c : g) c = clamp_unit_cube(c);
    return g;
  };
  return {rest_point(model.left), rest_point(model.right)};
}

std::vector<RetargetedKeyframe> retarget(std::span<const ScaledKeyframe> keyframes,
                                         Handedness handedness, const RobotModel& model) {
  const bool use_left = handedness != Handedness::Right;
  const bool use_right = handedness != Handedness::Left;
  const JointVector rest = rest_joint_vector(model);

  std::vector<RetargetedKeyframe> out;
  out.reserve(keyframes.size());
  for (const auto& k : keyframes) {
    RetargetedKeyframe r;
    r.phase = k.phase;
    r.hand_aperture = k.hand_aperture;
    r.angles = rest;
    auto solve = [&](const ArmModel& arm, const Point3& g, std::size_t base) {
      const IkSolution sol = solve_arm_ik(arm, gesture_to_torso(arm, g));
      r.angles[base + 0] = sol.angles.shoulder_pitch;
      r.angles[base + 1] = sol.angles.shoulder_roll;
      r.angles[base + 2] = sol.angles.elbow_pitch;
      r.reach_clamped = r.reach_clamped || sol.reach_clamped;
      r.limit_clamped = r.limit_clamped || sol.limit_clamped;
    };
    if (use_left) solve(model.left, k.left_wrist, 0);
    if (use_right) solve(model.right, k.right_wrist, 3);
    out.push_back(r);
  }
  return out;
}

double min_jerk_blend(double s) {
  const double s3 = s * s * s;
  return s3 * (10.0 - 15.0 * s + 6.0 * s * s);
}

double min_jerk(double q0, double q1, double s) { return std::lerp(q0, q1, min_jerk_blend(s)); }

JointTrajectory interpolate(std::span<const RetargetedKeyframe> keyframes, const JointVector& rest,
                            const PhasedPlan& phases, double sample_rate_hz) {
  if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz))
    throw SynthesisError("invalid sample rate: must be positive");
  if (keyframes.size() < 2) throw SynthesisError("interpolation needs at least two keyframes");

  std::vector<Segment> segments;
  auto add = [&](double t0, double t1, const JointVector& q0, const JointVector& q1) {
    if (t1 > t0) segments.push_back({t0, t1, q0, q1});
  };
  const Interval& stroke = phases.stroke;
  auto keyframe_time = [&](std::size_t i) {
    if (i + 1 == keyframes.size()) return stroke.end_s;
    return stroke.start_s + keyframes[i].phase * stroke.duration();
  };

  add(phases.prep.start_s, phases.prep.end_s, rest, keyframes.front().angles);
  for (std::size_t i = 0; i + 1 < keyframes.size(); ++i)
    add(keyframe_time(i), keyframe_time(i + 1), keyframes[i].angles, keyframes[i + 1].angles);
  add(phases.retract.start_s, phases.retract.end_s, keyframes.back().angles, rest);

  JointTrajectory traj;
  traj.joint_names.assign(kJointNames.begin(), kJointNames.end());
  if (segments.empty()) return traj;

  constexpr double kMerge = 1e-9;
  std::vector<double> endpoints{segments.front().t0};
  for (const auto& s : segments) endpoints.push_back(s.t1);

  const double t_begin = segments.front().t0;
  const double t_end = segments.back().t1;
  std::vector<double> times = endpoints;
  for (long k = 1;; ++k) {
    const double t = t_begin + static_cast<double>(k) / sample_rate_hz;
    if (t >= t_end - kMerge) break;
    const bool near_endpoint = std::any_of(endpoints.begin(), endpoints.end(),
                                           [&](double e) { return std::abs(e - t) <= kMerge; });
    if (!near_endpoint) times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [&](double a, double b) { return b - a <= kMerge; }),
              times.end());

  traj.points.reserve(times.size());
  std::size_t seg = 0;
  for (const double t : times) {
    while (seg + 1 < segments.size() && t > segments[seg].t1) ++seg;
    const Segment& s = segments[seg];
    TrajectoryPoint p;
    p.t_s = t;
    if (t >= s.t1) {
      p.positions = s.q1;
    } else if (t <= s.t0) {
      p.positions = s.q0;
    } else {
      const double u = (t - s.t0) / (s.t1 - s.t0);
      for (std::size_t j = 0; j < p.positions.size(); ++j) p.positions[j] = min_jerk(s.q0[j], s.q1[j], u);
    }
    traj.points.push_back(p);
  }
  return traj;
}

}  // namespace gestc
