#pragma once

// Built-in gesture shape templates, one per image schema plus a beat.
// Coordinates are in the normalized gesture cube [-1, 1]^3:
//   x  lateral, positive toward the robot's right
//   y  vertical, positive up
//   z  depth, positive forward away from the torso

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "gestc/types.hpp"

namespace gestc {

using Point3 = std::array<double, 3>;

enum class Handedness { Left, Right, Both };

std::string_view to_string(Handedness h);

struct Keyframe {
  double phase;  // fraction of the stroke in [0, 1]
  Point3 left_wrist;
  Point3 right_wrist;
  double hand_aperture;  // 0 closed, 1 open
};

struct GestureTemplate {
  std::string_view name;
  std::optional<ImageSchemaTag> schema;  // empty for the beat template
  Handedness handedness;
  std::span<const Keyframe> keyframes;
  std::string_view description;

  bool uses_left() const { return handedness != Handedness::Right; }
  bool uses_right() const { return handedness != Handedness::Left; }
};

const GestureTemplate& lookup_template(ImageSchemaTag schema);
const GestureTemplate& beat_template();

/// Every template (schemas in inventory order, then the beat), for inspection.
std::span<const GestureTemplate> template_library();

/// Keyframe invariants: at least two keyframes, phases start at 0, end at 1 and
/// strictly increase, points inside the cube, aperture in [0, 1].
constexpr bool template_valid(const GestureTemplate& t) {
  const auto& k = t.keyframes;
  if (k.size() < 2 || k.front().phase != 0.0 || k.back().phase != 1.0) return false;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i > 0 && !(k[i].phase > k[i - 1].phase)) return false;
    for (std::size_t c = 0; c < 3; ++c) {
      if (k[i].left_wrist[c] < -1.0 || k[i].left_wrist[c] > 1.0) return false;
      if (k[i].right_wrist[c] < -1.0 || k[i].right_wrist[c] > 1.0) return false;
    }
    if (k[i].hand_aperture < 0.0 || k[i].hand_aperture > 1.0) return false;
  }
  return true;
}

}  // namespace gestc
