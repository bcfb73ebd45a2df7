#pragma once

// Per-sentence planning record and the final gesture script with its
// canonical JSON and CSV encodings.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gestc/affect.hpp"
#include "gestc/planner.hpp"
#include "gestc/schema.hpp"
#include "gestc/synthesis.hpp"
#include "gestc/text.hpp"
#include "gestc/timing.hpp"

namespace gestc {

/// Everything computed for one sentence, kept for the script and the trace.
struct SentencePlan {
  Sentence sentence;
  SentenceTiming timing;
  VadTriple sentence_vad;
  std::vector<WordAffect> affect;
  std::vector<SchemaAnnotation> schemas;
  std::vector<GestureCandidate> candidates;  // scored iconic candidates
  std::optional<GestureCandidate> selected;  // iconic winner or beat fallback
  GestureParams params;
  PhasedPlan phases;
  std::vector<ScaledKeyframe> scaled;
  std::vector<RetargetedKeyframe> keyframes;
  JointTrajectory trajectory;
};

struct WordRecord {
  std::string surface;
  std::string lemma;
  PosTag pos = PosTag::X;
  WordTiming timing;
  std::optional<VadTriple> vad;
  std::optional<ImageSchemaTag> schema;
};

struct GestureRecord {
  GestureKind kind = GestureKind::Iconic;
  std::optional<ImageSchemaTag> schema;
  std::size_t word_index = 0;
  GestureParams params;
  PhasedPlan phases;
  JointTrajectory trajectory;
};

struct SentenceRecord {
  std::size_t index = 0;
  std::string text;
  std::vector<WordRecord> words;
  std::optional<GestureRecord> gesture;
};

struct GestureScript {
  int version = 1;
  std::string text;
  std::vector<SentenceRecord> sentences;
};

GestureScript assemble_script(std::string_view text, std::span<const SentencePlan> plans);

/// Canonical encoding: fixed key order, 6-digit decimals, trailing newline.
std::string script_to_json(const GestureScript& script);

/// `t_s,<joint names...>` then one row per sample of every gesture, in
/// sentence order.
std::string script_to_csv(const GestureScript& script);

}  // namespace gestc
