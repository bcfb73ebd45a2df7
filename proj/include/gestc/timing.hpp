#pragma once

// Deterministic speech-timing model: syllable-rate word durations with fixed
// inter-word gaps and inter-sentence pauses. Times are seconds from the start
// of the utterance.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gestc/text.hpp"
#include "gestc/types.hpp"

namespace gestc {

class TimingError : public Error {
 public:
  using Error::Error;
};

struct TimingConfig {
  double syllable_duration_s = 0.20;
  double interword_gap_s = 0.05;
  double sentence_pause_s = 0.30;

  /// Throws TimingError unless every constant is strictly positive and finite.
  void validate() const;
};

struct WordTiming {
  double start_s = 0.0;
  double duration_s = 0.0;
  double end_s() const { return start_s + duration_s; }
  friend bool operator==(const WordTiming&, const WordTiming&) = default;
};

struct SentenceTiming {
  /// One entry per token, parallel to Sentence::tokens.
  std::vector<WordTiming> tokens;
  /// Spoken span: first word start to last word end. Both are the running
  /// clock position when the sentence has no spoken words.
  double start_s = 0.0;
  double end_s = 0.0;
  bool has_words = false;
};

/// Vowel groups (a e i o u y), minus one for a trailing consonant + `e` when
/// more than one group exists. Throws TimingError for input without letters.
unsigned count_syllables(std::string_view word);

/// Tokens without letters (punctuation, bare numbers) are silent: zero
/// duration placed at the preceding word's end.
std::vector<SentenceTiming> estimate_timing(std::span<const Sentence> sentences,
                                            const TimingConfig& cfg);

}  // namespace gestc
