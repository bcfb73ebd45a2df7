#include "gestc/timing.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace gestc {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool has_letter(std::string_view s) { return std::any_of(s.begin(), s.end(), is_letter); }

}  // namespace

void TimingConfig::validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(syllable_duration_s) || !positive(interword_gap_s) || !positive(sentence_pause_s))
    throw TimingError("timing constants must be strictly positive");
}

unsigned count_syllables(std::string_view word) {
  if (!has_letter(word)) throw TimingError("no letters in '" + std::string(word) + "'");
  const std::string lower = to_lower(word);

  unsigned groups = 0;
  bool in_group = false;
  for (char c : lower) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }

  const std::size_t n = lower.size();
  if (groups > 1 && n >= 2 && lower[n - 1] == 'e' && is_letter(lower[n - 2]) && !is_vowel(lower[n - 2]))
    --groups;
  return std::max(groups, 1u);
}

std::vector<SentenceTiming> estimate_timing(std::span<const Sentence> sentences,
                                            const TimingConfig& cfg) {
  cfg.validate();

  // The clock is kept as integer counts so every time is a single
  // syllables*d + gaps*g + pauses*p expression; this keeps durations exactly
  // linear in each constant.
  unsigned long syllables = 0, gaps = 0, pauses = 0;
  bool any_word = false;
  auto clock = [&] {
    return static_cast<double>(syllables) * cfg.syllable_duration_s +
           static_cast<double>(gaps) * cfg.interword_gap_s +
           static_cast<double>(pauses) * cfg.sentence_pause_s;
  };

  std::vector<SentenceTiming> out;
  out.reserve(sentences.size());
  for (const auto& sentence : sentences) {
    SentenceTiming st;
    st.tokens.reserve(sentence.tokens.size());
    bool first_in_sentence = true;
    for (const auto& token : sentence.tokens) {
      if (!has_letter(token.surface)) {
        st.tokens.push_back({clock(), 0.0});
        continue;
      }
      if (any_word) (first_in_sentence ? pauses : gaps) += 1;
      const double start = clock();
      const unsigned n = count_syllables(token.surface);
      st.tokens.push_back({start, static_cast<double>(n) * cfg.syllable_duration_s});
      syllables += n;
      if (first_in_sentence) st.start_s = start;
      st.end_s = clock();
      first_in_sentence = false;
      any_word = true;
      st.has_words = true;
    }
    if (!st.has_words) st.start_s = st.end_s = clock();
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace gestc
