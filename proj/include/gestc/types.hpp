#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gestc {

/// Valence, arousal, dominance, each in [0, 1].
struct VadTriple {
  double valence = 0.5;
  double arousal = 0.5;
  double dominance = 0.5;

  static constexpr VadTriple neutral() { return {0.5, 0.5, 0.5}; }
  bool valid() const;
  friend bool operator==(const VadTriple&, const VadTriple&) = default;
};

/// Coarse part-of-speech tagset.
enum class PosTag {
  Noun, Verb, Adj, Adv, Pron, Det, Adp, Conj, Num, Part, Intj, Punct, X
};
inline constexpr std::size_t kPosTagCount = 13;

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

/// Closed image-schema inventory. Declaration order is the tie-break order.
enum class ImageSchemaTag {
  Container, Object, Path, SourcePathGoal, UpDown, NearFar, Force, Balance, Cycle, Scale
};
inline constexpr std::size_t kSchemaCount = 10;

inline constexpr std::array<ImageSchemaTag, kSchemaCount> kAllSchemas = {
    ImageSchemaTag::Container, ImageSchemaTag::Object,  ImageSchemaTag::Path,
    ImageSchemaTag::SourcePathGoal, ImageSchemaTag::UpDown, ImageSchemaTag::NearFar,
    ImageSchemaTag::Force,     ImageSchemaTag::Balance, ImageSchemaTag::Cycle,
    ImageSchemaTag::Scale};

std::string_view to_string(ImageSchemaTag tag);
std::optional<ImageSchemaTag> parse_schema_tag(std::string_view name);

/// Base class of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error tagged with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// ASCII helpers shared by the text stages.
std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
bool is_vowel(char lower_c);

}  // namespace gestc
