#pragma once

// Word-level VAD lookup with a whole-sentence fallback.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gestc/lexicon.hpp"
#include "gestc/text.hpp"
#include "gestc/types.hpp"

namespace gestc {

enum class AffectSource { Lexical, SentenceFallback };

std::string_view to_string(AffectSource source);

struct WordAffect {
  std::size_t token_index = 0;
  VadTriple vad;
  AffectSource source = AffectSource::SentenceFallback;
};

/// Number of tokens before a matched word searched for a negator.
inline constexpr std::size_t kNegationWindow = 3;

std::optional<VadTriple> lookup_word_vad(std::string_view lemma, const VadLexicon& lexicon);

/// True when `lower` is a negator. Entries containing an apostrophe (such as
/// "n't") also match as a clitic suffix, so "don't" counts as a negator.
bool is_negator(std::string_view lower, const std::set<std::string, std::less<>>& negators);

/// Mean VAD over the sentence's lexicon-covered content words (neutral when
/// none). A word preceded by a negator within kNegationWindow tokens
/// contributes 1 - valence.
VadTriple sentence_sentiment(const Sentence& sentence, const VadLexicon& lexicon,
                             const std::set<std::string, std::less<>>& negators);

/// One entry per content token, in token order.
std::vector<WordAffect> assign_affect(const Sentence& sentence, const VadLexicon& lexicon,
                                      const VadTriple& sentence_vad);

}  // namespace gestc
