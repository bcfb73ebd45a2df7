#pragma once

// Sentence splitting, tokenization, rule-based tagging/lemmatization and the
// content-word filter.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gestc/lexicon.hpp"
#include "gestc/types.hpp"

namespace gestc {

struct Token {
  std::size_t index = 0;
  std::string surface;
  std::string lemma;
  PosTag pos = PosTag::X;
  bool is_content = false;
  /// Byte offset of `surface` inside the owning sentence text.
  std::size_t offset = 0;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  std::vector<Token> tokens;
};

/// Splits on `.`, `!` or `?` followed by whitespace or end of input. No
/// abbreviation handling: "Mr. Smith" splits after "Mr.".
std::vector<Sentence> split_sentences(std::string_view text);

/// Whitespace split with leading/trailing punctuation runs detached as their
/// own tokens. Word-internal punctuation (contractions, hyphens) stays.
void tokenize(Sentence& sentence);

/// Assigns POS, lemma and the content flag to every token.
void tag_and_lemmatize(std::span<Token> tokens, const PosResources& resources);

PosTag tag_word(std::string_view lower, const PosResources& resources);
std::string lemmatize(std::string_view lower, PosTag pos, const PosResources& resources);

/// Content tokens in their original order.
std::vector<Token> filter_words(std::span<const Token> tokens);

bool is_punctuation_token(std::string_view surface);

}  // namespace gestc
