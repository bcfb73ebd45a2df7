#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gestc/synthesis.hpp"
#include "oracles.hpp"

using namespace gestc;

namespace {

const SentenceBounds kWide{0.0, 10.0, 0.3};

std::vector<RetargetedKeyframe> two_keyframes(double a, double b) {
  RetargetedKeyframe k0, k1;
  k0.phase = 0.0;
  k1.phase = 1.0;
  k0.angles.fill(a);
  k1.angles.fill(b);
  return {k0, k1};
}

}  // namespace

TEST_CASE("phase scheduling: nominal") {
  const auto p = schedule_phases({1.0, 0.4}, GestureParams{}, kWide);
  CHECK(p.stroke.start_s == 1.0);
  CHECK(p.stroke.end_s == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(p.prep.start_s == doctest::Approx(0.84).epsilon(1e-12));
  CHECK(p.prep.end_s == 1.0);
  CHECK(p.retract.start_s == p.stroke.end_s);
  CHECK(p.retract.end_s == doctest::Approx(1.64).epsilon(1e-12));
}

TEST_CASE("phase scheduling: speed halves the stroke") {
  const auto p = schedule_phases({1.0, 0.4}, GestureParams{2.0, 1.0, 0.0}, kWide);
  CHECK(p.stroke.duration() == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(p.prep.duration() == doctest::Approx(0.08).epsilon(1e-12));
  CHECK(p.retract.duration() == doctest::Approx(0.12).epsilon(1e-12));
}

TEST_CASE("phase scheduling: stroke source clamp") {
  CHECK(schedule_phases({1.0, 0.05}, GestureParams{}, kWide).stroke.duration() ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK(schedule_phases({1.0, 3.0}, GestureParams{}, kWide).stroke.duration() ==
        doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("phase scheduling: compression at the sentence edges") {
  const auto first = schedule_phases({0.0, 0.4}, GestureParams{}, {0.0, 0.4, 0.3});
  CHECK(first.prep.start_s == 0.0);
  CHECK(first.prep.duration() == 0.0);
  CHECK(first.retract.end_s <= 0.7 + 1e-12);

  const auto late = schedule_phases({2.0, 0.2}, GestureParams{}, {1.9, 2.2, 0.05});
  CHECK(late.prep.start_s == doctest::Approx(1.92).epsilon(1e-12));
  CHECK(late.retract.end_s == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("phase scheduling properties") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double s0 = 5.0 * u(rng);
    const double w0 = s0 + 3.0 * u(rng);
    const double dur = 0.05 + u(rng);
    const SentenceBounds b{s0, w0 + dur + u(rng), 0.3 * u(rng)};
    const auto p = schedule_phases({w0, dur}, extract_params({u(rng), u(rng), u(rng)}), b);
    CHECK(p.prep.start_s >= b.start_s);
    CHECK(p.prep.start_s <= p.prep.end_s);
    CHECK(p.prep.end_s == p.stroke.start_s);
    CHECK(p.stroke.start_s == w0);
    CHECK(p.stroke.end_s > p.stroke.start_s);
    CHECK(p.retract.start_s == p.stroke.end_s);
    CHECK(p.retract.end_s >= p.retract.start_s);
    CHECK(p.retract.end_s <= std::max(p.stroke.end_s, b.end_s + b.pause_s) + 1e-12);
  }
}

TEST_CASE("apply params") {
  const auto& tmpl = lookup_template(ImageSchemaTag::UpDown);
  const RestPoints rest{{-0.3, -0.9, 0.3}, {0.3, -0.9, 0.3}};

  const auto same = apply_params(tmpl, GestureParams{}, rest);
  REQUIRE(same.size() == tmpl.keyframes.size());
  for (std::size_t i = 0; i < same.size(); ++i) {
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(same[i].right_wrist[c] == doctest::Approx(tmpl.keyframes[i].right_wrist[c]).epsilon(1e-12));
    CHECK(same[i].left_wrist == rest.left);
  }

  const auto biased = apply_params(tmpl, GestureParams{1.0, 1.0, 0.1}, rest);
  CHECK(biased[0].right_wrist[1] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(biased[0].right_wrist[0] == 0.3);

  // Scaling away from rest, then clamping into the cube.
  const auto big = apply_params(tmpl, GestureParams{1.5, 1.5, 0.25}, rest);
  CHECK(big.back().right_wrist[1] == 1.0);
  CHECK(big.front().right_wrist[1] == doctest::Approx(-0.9 + 1.5 * 0.3 + 0.25).epsilon(1e-12));
}

TEST_CASE("amplitude increases the displacement from rest") {
  const RestPoints rest = gesture_rest_points(RobotModel::default_model());
  for (const auto& tmpl : template_library()) {
    double prev = -1.0;
    for (double a = 0.5; a <= 1.5; a += 0.25) {
      const auto k = apply_params(tmpl, GestureParams{1.0, a, 0.0}, rest);
      double sum = 0.0;
      for (const auto& kf : k)
        for (std::size_t c = 0; c < 3; ++c)
          sum += std::abs(kf.left_wrist[c] - rest.left[c]) + std::abs(kf.right_wrist[c] - rest.right[c]);
      CHECK(sum >= prev);
      prev = sum;
    }
  }
}

TEST_CASE("gesture space maps onto the reach box and back") {
  const auto model = RobotModel::default_model();
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Point3 g{u(rng), u(rng), u(rng)};
    const auto back = torso_to_gesture(model.right, gesture_to_torso(model.right, g));
    for (std::size_t c = 0; c < 3; ++c) CHECK(back[c] == doctest::Approx(g[c]).epsilon(1e-12));
  }
  // Positive gesture x points to the robot's right (negative torso y).
  const auto r = gesture_to_torso(model.right, {1, 0, 0}) - gesture_to_torso(model.right, {0, 0, 0});
  CHECK(r.y() < 0.0);
  const auto up = gesture_to_torso(model.right, {0, 1, 0}) - gesture_to_torso(model.right, {0, 0, 0});
  CHECK(up.z() > 0.0);
}

TEST_CASE("retarget keeps the idle arm at rest and reaches the targets") {
  const auto model = RobotModel::default_model();
  const auto rest = gesture_rest_points(model);
  const auto& tmpl = lookup_template(ImageSchemaTag::Path);
  const auto scaled = apply_params(tmpl, GestureParams{}, rest);
  const auto keys = retarget(scaled, tmpl.handedness, model);
  const auto rest_q = rest_joint_vector(model);
  REQUIRE(keys.size() == scaled.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(keys[i].angles[j] == rest_q[j]);
    if (!keys[i].reach_clamped && !keys[i].limit_clamped) {
      const ArmAngles q{keys[i].angles[3], keys[i].angles[4], keys[i].angles[5]};
      CHECK((oracle::wrist(model.right, q) - gesture_to_torso(model.right, scaled[i].right_wrist)).norm() <
            1e-6);
    }
  }
}

TEST_CASE("min-jerk blend") {
  CHECK(min_jerk(0.3, 1.7, 0.0) == 0.3);
  CHECK(min_jerk(0.3, 1.7, 1.0) == 1.7);
  CHECK(min_jerk(-2.0, 2.0, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(min_jerk(0.4, 0.4, 0.37) == 0.4);
  CHECK(min_jerk_blend(0.5) == 0.5);
}

TEST_CASE("interpolation") {
  const PhasedPlan p = schedule_phases({1.0, 0.4}, GestureParams{}, kWide);
  JointVector rest;
  rest.fill(0.0);
  const auto keys = two_keyframes(0.5, 1.0);
  const auto traj = interpolate(keys, rest, p, 50.0);
  REQUIRE(traj.joint_names.size() == 6);
  REQUIRE(traj.points.size() > 3);
  CHECK(traj.points.front().t_s == p.prep.start_s);
  CHECK(traj.points.back().t_s == p.retract.end_s);
  CHECK(traj.points.back().t_s - traj.points.front().t_s ==
        doctest::Approx(p.prep.duration() + p.stroke.duration() + p.retract.duration()).epsilon(1e-12));
  CHECK(traj.points.front().positions == rest);
  CHECK(traj.points.back().positions == rest);
  for (std::size_t i = 1; i < traj.points.size(); ++i) {
    CHECK(traj.points[i].t_s > traj.points[i - 1].t_s);
    for (double q : traj.points[i].positions) {
      CHECK(q >= 0.0);
      CHECK(q <= 1.0);
    }
  }
  bool hit_stroke_start = false, hit_stroke_end = false;
  for (const auto& pt : traj.points) {
    if (pt.t_s == p.stroke.start_s) hit_stroke_start = pt.positions == keys[0].angles;
    if (pt.t_s == p.stroke.end_s) hit_stroke_end = pt.positions == keys[1].angles;
  }
  CHECK(hit_stroke_start);
  CHECK(hit_stroke_end);

  CHECK_THROWS_AS(interpolate(keys, rest, p, 0.0), SynthesisError);
  CHECK_THROWS_AS(interpolate(keys, rest, p, -5.0), SynthesisError);
  CHECK_THROWS_AS(interpolate(std::span(keys).first(1), rest, p, 50.0), SynthesisError);
}

TEST_CASE("endpoint velocities vanish") {
  const PhasedPlan p = schedule_phases({1.0, 0.8}, GestureParams{}, kWide);
  JointVector rest;
  rest.fill(0.2);
  const auto keys = two_keyframes(1.1, -0.4);
  const double rate = 1000.0;
  const auto traj = interpolate(keys, rest, p, rate);
  REQUIRE(traj.points.size() > 10);
  auto speed = [&](std::size_t i) {
    double m = 0.0;
    for (std::size_t j = 0; j < 6; ++j)
      m = std::max(m, std::abs(traj.points[i + 1].positions[j] - traj.points[i].positions[j]) /
                          (traj.points[i + 1].t_s - traj.points[i].t_s));
    return m;
  };
  CHECK(speed(0) < 1e-3);
  const std::size_t n = traj.points.size();
  CHECK(speed(n - 2) < 1e-3);
}
