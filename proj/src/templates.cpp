#include "gestc/templates.hpp"

namespace gestc {

namespace {

// Nominal idle-arm points; the idle arm of a one-handed template is held at
// the robot's rest pose when parameters are applied.
constexpr Point3 kIdleL{-0.3, -0.9, 0.3};
constexpr Point3 kIdleR{0.3, -0.9, 0.3};

// Hands trace the top, side walls and front of a box-shaped volume.
constexpr Keyframe kContainer[] = {
    {0.0, {-0.5, 0.3, 0.3}, {0.5, 0.3, 0.3}, 0.8},
    {1.0 / 3.0, {-0.5, -0.3, 0.3}, {0.5, -0.3, 0.3}, 0.8},
    {2.0 / 3.0, {-0.5, -0.3, 0.7}, {0.5, -0.3, 0.7}, 0.8},
    {1.0, {-0.5, 0.3, 0.7}, {0.5, 0.3, 0.7}, 0.8},
};

// Two cupped hands close around a compact object and hold it.
constexpr Keyframe kObject[] = {
    {0.0, {-0.45, 0.0, 0.4}, {0.45, 0.0, 0.4}, 0.9},
    {0.6, {-0.15, 0.05, 0.5}, {0.15, 0.05, 0.5}, 0.5},
    {1.0, {-0.15, 0.1, 0.5}, {0.15, 0.1, 0.5}, 0.4},
};

constexpr Keyframe kPath[] = {
    {0.0, kIdleL, {-0.6, 0.0, 0.4}, 0.6},
    {0.5, kIdleL, {0.0, 0.2, 0.6}, 0.6},
    {1.0, kIdleL, {0.6, 0.0, 0.4}, 0.6},
};

constexpr Keyframe kSourcePathGoal[] = {
    {0.0, kIdleL, {-0.4, -0.1, 0.1}, 0.7},
    {0.5, kIdleL, {0.1, 0.1, 0.5}, 0.6},
    {1.0, kIdleL, {0.5, 0.0, 0.9}, 0.2},
};

constexpr Keyframe kUpDown[] = {
    {0.0, kIdleL, {0.3, -0.6, 0.4}, 0.5},
    {0.5, kIdleL, {0.3, 0.1, 0.5}, 0.5},
    {1.0, kIdleL, {0.3, 0.8, 0.4}, 0.5},
};

constexpr Keyframe kNearFar[] = {
    {0.0, kIdleL, {0.2, 0.0, 0.0}, 0.6},
    {1.0, kIdleL, {0.2, 0.1, 0.9}, 0.6},
};

// Both palms push forward.
constexpr Keyframe kForce[] = {
    {0.0, {-0.3, 0.0, 0.1}, {0.3, 0.0, 0.1}, 1.0},
    {0.7, {-0.3, 0.05, 0.8}, {0.3, 0.05, 0.8}, 1.0},
    {1.0, {-0.3, 0.05, 0.9}, {0.3, 0.05, 0.9}, 1.0},
};

// Scale-pan motion: hands alternate heights, then settle level.
constexpr Keyframe kBalance[] = {
    {0.0, {-0.5, 0.0, 0.5}, {0.5, 0.0, 0.5}, 1.0},
    {0.3, {-0.5, 0.3, 0.5}, {0.5, -0.3, 0.5}, 1.0},
    {0.65, {-0.5, -0.3, 0.5}, {0.5, 0.3, 0.5}, 1.0},
    {1.0, {-0.5, 0.0, 0.5}, {0.5, 0.0, 0.5}, 1.0},
};

// One loop in the frontal plane.
constexpr Keyframe kCycle[] = {
    {0.0, kIdleL, {0.3, 0.4, 0.5}, 0.5},
    {0.25, kIdleL, {0.7, 0.0, 0.5}, 0.5},
    {0.5, kIdleL, {0.3, -0.4, 0.5}, 0.5},
    {0.75, kIdleL, {-0.1, 0.0, 0.5}, 0.5},
    {1.0, kIdleL, {0.3, 0.4, 0.5}, 0.5},
};

constexpr Keyframe kScale[] = {
    {0.0, {-0.1, 0.0, 0.5}, {0.1, 0.0, 0.5}, 0.8},
    {0.5, {-0.4, 0.05, 0.5}, {0.4, 0.05, 0.5}, 0.9},
    {1.0, {-0.8, 0.1, 0.5}, {0.8, 0.1, 0.5}, 1.0},
};

constexpr Keyframe kBeat[] = {
    {0.0, kIdleL, {0.2, 0.1, 0.4}, 0.4},
    {0.5, kIdleL, {0.2, -0.2, 0.45}, 0.4},
    {1.0, kIdleL, {0.2, 0.0, 0.4}, 0.4},
};

constexpr std::array<GestureTemplate, kSchemaCount + 1> kLibrary = {{
    {"container", ImageSchemaTag::Container, Handedness::Both, kContainer,
     "two-handed box tracing outlining a bounded volume"},
    {"object", ImageSchemaTag::Object, Handedness::Both, kObject,
     "two hands close around a compact object"},
    {"path", ImageSchemaTag::Path, Handedness::Right, kPath,
     "one-handed lateral arc from left to right"},
    {"source_path_goal", ImageSchemaTag::SourcePathGoal, Handedness::Right, kSourcePathGoal,
     "hand travels from the body to a forward goal and closes"},
    {"up_down", ImageSchemaTag::UpDown, Handedness::Right, kUpDown,
     "one-handed vertical sweep from low to high"},
    {"near_far", ImageSchemaTag::NearFar, Handedness::Right, kNearFar,
     "hand extends from near the torso to far reach"},
    {"force", ImageSchemaTag::Force, Handedness::Both, kForce,
     "both open palms push forward"},
    {"balance", ImageSchemaTag::Balance, Handedness::Both, kBalance,
     "hands alternate heights like scale pans then level out"},
    {"cycle", ImageSchemaTag::Cycle, Handedness::Right, kCycle,
     "one-handed loop in the frontal plane"},
    {"scale", ImageSchemaTag::Scale, Handedness::Both, kScale,
     "hands spread apart to show growing size"},
    {"beat", std::nullopt, Handedness::Right, kBeat,
     "small rhythmic down-up flick"},
}};

constexpr bool library_complete() {
  for (std::size_t i = 0; i < kSchemaCount; ++i)
    if (kLibrary[i].schema != kAllSchemas[i]) return false;
  for (const auto& t : kLibrary)
    if (!template_valid(t)) return false;
  return !kLibrary.back().schema.has_value();
}

static_assert(library_complete(), "every schema needs exactly one valid template, in inventory order");

}  // namespace

std::string_view to_string(Handedness h) {
  switch (h) {
    case Handedness::Left: return "LEFT";
    case Handedness::Right: return "RIGHT";
    case Handedness::Both: return "BOTH";
  }
  return "BOTH";
}

const GestureTemplate& lookup_template(ImageSchemaTag schema) {
  return kLibrary[static_cast<std::size_t>(schema)];
}

const GestureTemplate& beat_template() { return kLibrary.back(); }

std::span<const GestureTemplate> template_library() { return kLibrary; }

}  // namespace gestc
