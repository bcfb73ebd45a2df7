#pragma once

// Immutable lexical resources: VAD affect lexicon, image-schema lexicon, and
// the POS tagging resources (tag lexicon, suffix rules, stopwords).

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gestc/types.hpp"

namespace gestc {

class LexiconError : public Error {
 public:
  enum class Kind { MalformedLine, OutOfRange, UnknownSchemaTag, InvalidWeight, UnknownPosTag, ParseError };

  LexiconError(Kind kind, std::string message, std::size_t line_no = 0, std::string lemma = {})
      : Error(std::move(message)), kind_(kind), line_no_(line_no), lemma_(std::move(lemma)) {}

  Kind kind() const noexcept { return kind_; }
  /// 1-based source line, 0 when not applicable.
  std::size_t line_no() const noexcept { return line_no_; }
  const std::string& lemma() const noexcept { return lemma_; }

 private:
  Kind kind_;
  std::size_t line_no_;
  std::string lemma_;
};

struct LoadWarning {
  std::size_t line_no;
  std::string message;
};

class VadLexicon {
 public:
  using Map = std::map<std::string, VadTriple, std::less<>>;

  VadLexicon() = default;
  VadLexicon(Map entries, std::vector<LoadWarning> warnings)
      : entries_(std::move(entries)), warnings_(std::move(warnings)) {}

  std::optional<VadTriple> find(std::string_view lemma) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Map& entries() const noexcept { return entries_; }
  const std::vector<LoadWarning>& warnings() const noexcept { return warnings_; }

 private:
  Map entries_;
  std::vector<LoadWarning> warnings_;
};

/// Parses `word<TAB>valence<TAB>arousal<TAB>dominance` lines. Blank lines and
/// lines starting with `#` are skipped; the first definition of a word wins.
VadLexicon load_vad_lexicon(std::istream& source);

struct SchemaWeight {
  ImageSchemaTag schema;
  double weight;
  friend bool operator==(const SchemaWeight&, const SchemaWeight&) = default;
};

class SchemaLexicon {
 public:
  using Map = std::map<std::string, std::vector<SchemaWeight>, std::less<>>;

  SchemaLexicon() = default;
  explicit SchemaLexicon(Map entries) : entries_(std::move(entries)) {}

  /// Lemma's schemas, weights descending; nullptr when absent.
  const std::vector<SchemaWeight>* find(std::string_view lemma) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const Map& entries() const noexcept { return entries_; }
  friend bool operator==(const SchemaLexicon&, const SchemaLexicon&) = default;

 private:
  Map entries_;
};

SchemaLexicon load_schema_lexicon(std::istream& source);
std::string serialize_schema_lexicon(const SchemaLexicon& lexicon);

struct PosResources {
  std::map<std::string, PosTag, std::less<>> tag_lexicon;
  /// Applied in declared order; the longest matching suffix wins.
  std::vector<std::pair<std::string, PosTag>> suffix_rules;
  std::set<std::string, std::less<>> stopwords;
  /// Irregular forms: lowercase surface -> lemma. Checked before any stripping.
  std::map<std::string, std::string, std::less<>> lemma_exceptions;
  /// Tokens that reflect the valence of nearby matched words.
  std::set<std::string, std::less<>> negators{"not", "no", "never", "n't"};
};

PosResources load_pos_resources(std::istream& source);

}  // namespace gestc
