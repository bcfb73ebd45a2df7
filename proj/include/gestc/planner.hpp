#pragma once

// Candidate join, affect-driven motion parameters, ranking and the beat
// fallback. One sentence in, at most one gesture out.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gestc/affect.hpp"
#include "gestc/schema.hpp"
#include "gestc/text.hpp"
#include "gestc/timing.hpp"
#include "gestc/types.hpp"

namespace gestc {

enum class GestureKind { Iconic, Beat };

std::string_view to_string(GestureKind kind);

/// Multipliers and offset applied to a template. Neutral affect maps to
/// (1, 1, 0).
struct GestureParams {
  double speed_factor = 1.0;      // [0.5, 1.5]
  double amplitude_factor = 1.0;  // [0.5, 1.5]
  double vertical_bias = 0.0;     // [-0.25, 0.25] gesture-space units
  friend bool operator==(const GestureParams&, const GestureParams&) = default;
};

/// speed = amplitude = 0.5 + arousal, bias = 0.5 (valence - 0.5). Dominance
/// does not drive motion.
GestureParams extract_params(const VadTriple& vad);

struct ScoreBreakdown {
  double extremity = 0.0;
  double pos_weight = 0.0;
  double schema_weight = 0.0;
  double affect_term = 0.0;
  double pos_term = 0.0;
  double schema_term = 0.0;
};

struct GestureCandidate {
  std::size_t token_index = 0;
  GestureKind kind = GestureKind::Iconic;
  std::optional<ImageSchemaTag> schema;  // set iff kind == Iconic
  double schema_weight = 0.0;
  PosTag pos = PosTag::Noun;
  VadTriple vad;
  WordTiming timing;
  double score = 0.0;
  ScoreBreakdown breakdown;
};

class PlannerError : public Error {
 public:
  using Error::Error;
};

struct RankWeights {
  double affect = 0.5;
  double pos = 0.3;
  double schema = 0.2;

  /// Throws PlannerError (InvalidWeights) if any weight is negative or
  /// non-finite, or all are zero.
  void validate() const;
};

/// Mean absolute distance from neutral, normalized to [0, 1].
double extremity(const VadTriple& vad);
double pos_rank_weight(PosTag pos);

/// Inner join of affect and schema annotations on token index.
std::vector<GestureCandidate> join_candidates(const Sentence& sentence,
                                              std::span<const WordAffect> affect,
                                              std::span<const SchemaAnnotation> schemas,
                                              const SentenceTiming& timing);

ScoreBreakdown score_candidate(const GestureCandidate& c, const RankWeights& w);

/// Fills score and breakdown of every candidate.
void score_candidates(std::span<GestureCandidate> candidates, const RankWeights& w);

/// Highest score wins; scores within kScoreTieTolerance count as ties and go
/// to the smallest token index.
std::optional<GestureCandidate> rank_and_select(std::span<const GestureCandidate> candidates,
                                                const RankWeights& w);

inline constexpr double kScoreTieTolerance = 1e-12;

/// Beat anchored on the most affect-extreme content word (earliest on ties),
/// carrying the sentence VAD. Empty when the sentence has no content word.
std::optional<GestureCandidate> beat_fallback(const Sentence& sentence,
                                              std::span<const WordAffect> affect,
                                              const VadTriple& sentence_vad,
                                              const SentenceTiming& timing,
                                              const RankWeights& w);

}  // namespace gestc
