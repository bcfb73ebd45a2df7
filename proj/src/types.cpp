#include "gestc/types.hpp"

#include <algorithm>
#include <cctype>

namespace gestc {

namespace {

constexpr std::array<std::string_view, kPosTagCount> kPosNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP",
    "CONJ", "NUM",  "PART", "INTJ", "PUNCT", "X"};

constexpr std::array<std::string_view, kSchemaCount> kSchemaNames = {
    "CONTAINER", "OBJECT", "PATH",    "SOURCE_PATH_GOAL", "UP_DOWN",
    "NEAR_FAR",  "FORCE",  "BALANCE", "CYCLE",            "SCALE"};

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

bool VadTriple::valid() const {
  return in_unit(valence) && in_unit(arousal) && in_unit(dominance);
}

std::string_view to_string(PosTag tag) {
  return kPosNames[static_cast<std::size_t>(tag)];
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i)
    if (kPosNames[i] == name) return static_cast<PosTag>(i);
  return std::nullopt;
}

std::string_view to_string(ImageSchemaTag tag) {
  return kSchemaNames[static_cast<std::size_t>(tag)];
}

std::optional<ImageSchemaTag> parse_schema_tag(std::string_view name) {
  for (std::size_t i = 0; i < kSchemaNames.size(); ++i)
    if (kSchemaNames[i] == name) return static_cast<ImageSchemaTag>(i);
  return std::nullopt;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_vowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

}  // namespace gestc
