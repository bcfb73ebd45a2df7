#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gestc/timing.hpp"
#include "oracles.hpp"

using namespace gestc;

namespace {

std::vector<Sentence> analyzed(const std::string& text) {
  auto sentences = split_sentences(text);
  for (auto& s : sentences) {
    tokenize(s);
    tag_and_lemmatize(s.tokens, oracle::fixture_resources().pos);
  }
  return sentences;
}

}  // namespace

TEST_CASE("syllable counts") {
  CHECK(count_syllables("cat") == 1);
  CHECK(count_syllables("beautiful") == 3);
  CHECK(count_syllables("make") == 1);
  CHECK(count_syllables("the") == 1);
  CHECK(count_syllables("rhythm") == 1);
  CHECK(count_syllables("Happy") == 2);
  CHECK(count_syllables("don't") == 1);
  CHECK(count_syllables("hmm") == 1);
  CHECK_THROWS_AS(count_syllables("..."), TimingError);
  CHECK_THROWS_AS(count_syllables("42"), TimingError);
}

TEST_CASE("syllable counts agree with the regex oracle") {
  const auto& lex = oracle::fixture_resources().vad;
  std::size_t checked = 0;
  for (const auto& [word, vad] : lex.entries()) {
    CHECK_MESSAGE(count_syllables(word) == oracle::syllables(word), word);
    ++checked;
  }
  for (const auto& [word, tag] : oracle::fixture_resources().pos.tag_lexicon) {
    bool letters = false;
    for (char c : word) letters = letters || std::isalpha(static_cast<unsigned char>(c));
    if (!letters) continue;
    CHECK_MESSAGE(count_syllables(word) == oracle::syllables(word), word);
    ++checked;
  }
  std::mt19937 rng(5);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  for (int i = 0; i < 2000; ++i) {
    std::string w(1 + rng() % 10, 'a');
    for (auto& c : w) c = alphabet[rng() % alphabet.size()];
    CHECK_MESSAGE(count_syllables(w) == oracle::syllables(w), w);
    ++checked;
  }
  CHECK(checked > 2000);
}

TEST_CASE("timing of a single sentence") {
  const auto t = estimate_timing(analyzed("Grab the box."), TimingConfig{});
  REQUIRE(t.size() == 1);
  REQUIRE(t[0].tokens.size() == 4);
  CHECK(t[0].tokens[0] == WordTiming{0.0, 0.2});
  CHECK(t[0].tokens[1] == WordTiming{0.25, 0.2});
  CHECK(t[0].tokens[2] == WordTiming{0.5, 0.2});
  CHECK(t[0].tokens[3].duration_s == 0.0);
  CHECK(t[0].tokens[3].start_s == doctest::Approx(0.7));
  CHECK(t[0].start_s == 0.0);
  CHECK(t[0].end_s == doctest::Approx(0.7));
}

TEST_CASE("sentence pause replaces the word gap") {
  const auto t = estimate_timing(analyzed("Go. Go."), TimingConfig{});
  REQUIRE(t.size() == 2);
  CHECK(t[0].tokens[0] == WordTiming{0.0, 0.2});
  CHECK(t[1].tokens[0].start_s == 0.5);
  CHECK(t[1].start_s == 0.5);
}

TEST_CASE("timing validation") {
  CHECK_THROWS_AS((TimingConfig{0.0, 0.05, 0.3}.validate()), TimingError);
  CHECK_THROWS_AS((TimingConfig{0.2, -0.05, 0.3}.validate()), TimingError);
  CHECK_THROWS_AS((TimingConfig{0.2, 0.05, std::nan("")}.validate()), TimingError);
  CHECK_NOTHROW(TimingConfig{}.validate());
  const auto s = analyzed("Go.");
  CHECK_THROWS_AS(estimate_timing(s, TimingConfig{0.0, 0.05, 0.3}), TimingError);
}

TEST_CASE("timing properties over the demo text") {
  const auto sentences = analyzed(oracle::read_file(std::string(GESTC_DATA_DIR) + "/demo.txt"));
  REQUIRE(sentences.size() > 1);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.01, 0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const TimingConfig cfg{u(rng), u(rng), u(rng)};
    const auto t = estimate_timing(sentences, cfg);
    long syl = 0, gaps = 0, pauses = 0;
    double prev_end = 0.0;
    bool first_word = true;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      bool first_in_sentence = true;
      for (std::size_t k = 0; k < sentences[i].tokens.size(); ++k) {
        const auto& tok = sentences[i].tokens[k];
        const auto& wt = t[i].tokens[k];
        CHECK(wt.start_s >= prev_end - 1e-12);
        bool letters = false;
        for (char c : tok.surface) letters = letters || std::isalpha(static_cast<unsigned char>(c));
        if (!letters) {
          CHECK(wt.duration_s == 0.0);
          continue;
        }
        if (!first_word) (first_in_sentence ? pauses : gaps) += 1;
        first_word = false;
        first_in_sentence = false;
        const unsigned n = oracle::syllables(tok.surface);
        syl += n;
        CHECK(wt.duration_s == doctest::Approx(n * cfg.syllable_duration_s).epsilon(1e-12));
        prev_end = wt.end_s();
      }
    }
    const double expected = syl * cfg.syllable_duration_s + gaps * cfg.interword_gap_s +
                            pauses * cfg.sentence_pause_s;
    CHECK(t.back().end_s == doctest::Approx(expected).epsilon(1e-12));

    // Total duration is linear in the syllable duration.
    TimingConfig doubled = cfg;
    doubled.syllable_duration_s *= 2;
    const auto t2 = estimate_timing(sentences, doubled);
    CHECK(t2.back().end_s - t.back().end_s ==
          doctest::Approx(syl * cfg.syllable_duration_s).epsilon(1e-12));
  }
}
