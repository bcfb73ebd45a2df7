#include "gestc/text.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <optional>

namespace gestc {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }
bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool has_vowel(std::string_view s) { return std::any_of(s.begin(), s.end(), is_vowel); }

bool is_consonant(char c) { return std::isalpha(static_cast<unsigned char>(c)) && !is_vowel(c); }

bool is_numeric(std::string_view s) {
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == ',' || c == ':';
  });
}

std::size_t vowel_groups(std::string_view s) {
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : s) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Undo consonant doubling ("runn" -> "run") or restore a dropped silent e
// ("mak" -> "make") on a stem left by stripping -ing / -ed.
std::string repair_stem(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && is_consonant(stem[n - 1])) {
    if (std::string_view("lsz").find(stem[n - 1]) == std::string_view::npos) stem.pop_back();
    return stem;
  }
  if (n >= 1 && stem[n - 1] == 'v') return stem + 'e';
  if (n >= 3 && is_consonant(stem[n - 3]) && is_vowel(stem[n - 2]) && is_consonant(stem[n - 1]) &&
      std::string_view("wxy").find(stem[n - 1]) == std::string_view::npos && vowel_groups(stem) == 1)
    return stem + 'e';
  return stem;
}

std::optional<std::string> strip_progressive_or_past(std::string_view w) {
  if (ends_with(w, "ing")) {
    const auto stem = w.substr(0, w.size() - 3);
    if (stem.size() >= 2 && has_vowel(stem)) return repair_stem(std::string(stem));
    return std::nullopt;
  }
  if (ends_with(w, "ied") && w.size() > 4) return std::string(w.substr(0, w.size() - 3)) + 'y';
  if (ends_with(w, "ed")) {
    const auto stem = w.substr(0, w.size() - 2);
    if (stem.size() >= 2 && has_vowel(stem)) return repair_stem(std::string(stem));
  }
  return std::nullopt;
}

std::optional<std::string> strip_plural_or_third(std::string_view w) {
  if (ends_with(w, "ies") && w.size() > 4) return std::string(w.substr(0, w.size() - 3)) + 'y';
  if (ends_with(w, "es") && w.size() > 3) {
    const auto stem = w.substr(0, w.size() - 2);
    if (ends_with(stem, "ss") || ends_with(stem, "x") || ends_with(stem, "z") ||
        ends_with(stem, "ch") || ends_with(stem, "sh"))
      return std::string(stem);
  }
  if (ends_with(w, "s") && w.size() > 3 && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is"))
    return std::string(w.substr(0, w.size() - 1));
  return std::nullopt;
}

bool excluded_pos(PosTag pos) {
  switch (pos) {
    case PosTag::Det: case PosTag::Adp: case PosTag::Conj:
    case PosTag::Pron: case PosTag::Part: case PosTag::Punct:
      return true;
    default:
      return false;
  }
}

void push_token(Sentence& s, std::size_t offset, std::size_t len) {
  Token t;
  t.index = s.tokens.size();
  t.surface = s.text.substr(offset, len);
  t.offset = offset;
  s.tokens.push_back(std::move(t));
}

}  // namespace

bool is_punctuation_token(std::string_view surface) {
  return !surface.empty() && std::all_of(surface.begin(), surface.end(), is_punct);
}

std::vector<Sentence> split_sentences(std::string_view text) {
  std::vector<Sentence> out;
  auto emit = [&](std::string_view segment) {
    segment = trim(segment);
    if (segment.empty()) return;
    Sentence s;
    s.index = out.size();
    s.text = std::string(segment);
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (is_terminator(text[i]) && (i + 1 == text.size() || is_space(text[i + 1]))) {
      emit(text.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  if (start < text.size()) emit(text.substr(start));
  return out;
}

void tokenize(Sentence& sentence) {
  sentence.tokens.clear();
  const std::string_view text = sentence.text;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t end = i;
    while (end < text.size() && !is_space(text[end])) ++end;

    const auto chunk = text.substr(i, end - i);
    if (is_punctuation_token(chunk)) {
      push_token(sentence, i, chunk.size());
    } else {
      std::size_t lead = 0;
      while (is_punct(chunk[lead])) ++lead;
      std::size_t trail = 0;
      while (is_punct(chunk[chunk.size() - 1 - trail])) ++trail;
      if (lead > 0) push_token(sentence, i, lead);
      push_token(sentence, i + lead, chunk.size() - lead - trail);
      if (trail > 0) push_token(sentence, end - trail, trail);
    }
    i = end;
  }
}

PosTag tag_word(std::string_view lower, const PosResources& res) {
  if (is_punctuation_token(lower)) return PosTag::Punct;
  if (const auto it = res.tag_lexicon.find(lower); it != res.tag_lexicon.end()) return it->second;
  if (is_numeric(lower)) return PosTag::Num;

  const std::pair<std::string, PosTag>* best = nullptr;
  for (const auto& rule : res.suffix_rules) {
    if (lower.size() > rule.first.size() && ends_with(lower, rule.first) &&
        (best == nullptr || rule.first.size() > best->first.size()))
      best = &rule;
  }
  return best ? best->second : PosTag::Noun;
}

std::string lemmatize(std::string_view lower, PosTag pos, const PosResources& res) {
  if (const auto it = res.lemma_exceptions.find(lower); it != res.lemma_exceptions.end())
    return it->second;
  // Tag-lexicon entries are base forms.
  if (res.tag_lexicon.contains(lower)) return std::string(lower);

  std::optional<std::string> stripped;
  if (pos == PosTag::Verb) {
    stripped = strip_progressive_or_past(lower);
    if (!stripped) stripped = strip_plural_or_third(lower);
  } else if (pos == PosTag::Noun) {
    stripped = strip_plural_or_third(lower);
  }
  return stripped.value_or(std::string(lower));
}

void tag_and_lemmatize(std::span<Token> tokens, const PosResources& res) {
  for (auto& t : tokens) {
    const std::string lower = to_lower(t.surface);
    t.pos = tag_word(lower, res);
    t.lemma = lemmatize(lower, t.pos, res);
    t.is_content = !excluded_pos(t.pos) && !res.stopwords.contains(lower);
  }
}

std::vector<Token> filter_words(std::span<const Token> tokens) {
  std::vector<Token> out;
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [](const Token& t) { return t.is_content; });
  return out;
}

}  // namespace gestc
