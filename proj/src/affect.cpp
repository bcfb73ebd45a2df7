#include "gestc/affect.hpp"

namespace gestc {

std::string_view to_string(AffectSource source) {
  return source == AffectSource::Lexical ? "LEXICAL" : "SENTENCE_FALLBACK";
}

std::optional<VadTriple> lookup_word_vad(std::string_view lemma, const VadLexicon& lexicon) {
  return lexicon.find(lemma);
}

bool is_negator(std::string_view lower, const std::set<std::string, std::less<>>& negators) {
  if (negators.contains(lower)) return true;
  for (const auto& n : negators) {
    if (n.find('\'') != std::string::npos && lower.size() > n.size() &&
        lower.substr(lower.size() - n.size()) == n)
      return true;
  }
  return false;
}

VadTriple sentence_sentiment(const Sentence& sentence, const VadLexicon& lexicon,
                             const std::set<std::string, std::less<>>& negators) {
  const auto& tokens = sentence.tokens;
  double v = 0.0, a = 0.0, d = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_content) continue;
    const auto vad = lexicon.find(tokens[i].lemma);
    if (!vad) continue;

    bool negated = false;
    for (std::size_t k = i >= kNegationWindow ? i - kNegationWindow : 0; k < i; ++k)
      negated = negated || is_negator(to_lower(tokens[k].surface), negators);

    v += negated ? 1.0 - vad->valence : vad->valence;
    a += vad->arousal;
    d += vad->dominance;
    ++hits;
  }
  if (hits == 0) return VadTriple::neutral();
  const double n = static_cast<double>(hits);
  return {v / n, a / n, d / n};
}

std::vector<WordAffect> assign_affect(const Sentence& sentence, const VadLexicon& lexicon,
                                      const VadTriple& sentence_vad) {
  std::vector<WordAffect> out;
  for (const auto& t : sentence.tokens) {
    if (!t.is_content) continue;
    if (const auto vad = lexicon.find(t.lemma))
      out.push_back({t.index, *vad, AffectSource::Lexical});
    else
      out.push_back({t.index, sentence_vad, AffectSource::SentenceFallback});
  }
  return out;
}

}  // namespace gestc
