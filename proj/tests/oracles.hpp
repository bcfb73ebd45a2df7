#pragma once

// Test-only reference computations, written independently of the library
// code paths they check.

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <Eigen/Geometry>

#include "gestc/pipeline.hpp"
#include "gestc/robot.hpp"

namespace oracle {

/// Wrist position from an explicit rotation chain: roll about torso x, then
/// pitch and elbow about the rotated lateral axis, links hanging along -z.
inline Eigen::Vector3d wrist(const gestc::ArmModel& arm, const gestc::ArmAngles& q) {
  using Eigen::AngleAxisd;
  using Eigen::Vector3d;
  const Eigen::Matrix3d shoulder =
      (AngleAxisd(q.shoulder_roll, Vector3d::UnitX()) * AngleAxisd(-q.shoulder_pitch, Vector3d::UnitY()))
          .toRotationMatrix();
  const Eigen::Matrix3d elbow = AngleAxisd(-q.elbow_pitch, Vector3d::UnitY()).toRotationMatrix();
  const Vector3d down(0.0, 0.0, -1.0);
  return arm.shoulder + shoulder * (arm.upper_arm_len * down + elbow * (arm.forearm_len * down));
}

/// Vowel groups by regex, silent-e rule applied afterwards.
inline unsigned syllables(const std::string& word) {
  std::string w;
  for (char c : word) w += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static const std::regex groups("[aeiouy]+");
  unsigned n = static_cast<unsigned>(std::distance(std::sregex_iterator(w.begin(), w.end(), groups),
                                                   std::sregex_iterator()));
  static const std::regex silent_e(".*[b-df-hj-np-tv-xz]e$");
  if (n > 1 && std::regex_match(w, silent_e)) --n;
  return n == 0 ? 1 : n;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline gestc::ResourcePaths fixture_paths() {
  const std::string dir = GESTC_DATA_DIR;
  return {dir + "/vad_lexicon.tsv", dir + "/schema_lexicon.json", dir + "/pos_resources.json",
          std::nullopt};
}

inline const gestc::Resources& fixture_resources() {
  static const gestc::Resources res = gestc::load_resources(fixture_paths());
  return res;
}

}  // namespace oracle
