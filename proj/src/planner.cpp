#include "gestc/planner.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gestc {

std::string_view to_string(GestureKind kind) {
  return kind == GestureKind::Iconic ? "ICONIC" : "BEAT";
}

GestureParams extract_params(const VadTriple& vad) {
  return {0.5 + vad.arousal, 0.5 + vad.arousal, 0.5 * (vad.valence - 0.5)};
}

void RankWeights::validate() const {
  const bool finite = std::isfinite(affect) && std::isfinite(pos) && std::isfinite(schema);
  if (!finite || affect < 0.0 || pos < 0.0 || schema < 0.0)
    throw PlannerError("invalid ranker weights: negative or non-finite");
  if (affect == 0.0 && pos == 0.0 && schema == 0.0)
    throw PlannerError("invalid ranker weights: all zero");
}

double extremity(const VadTriple& vad) {
  return (std::abs(vad.valence - 0.5) + std::abs(vad.arousal - 0.5) +
          std::abs(vad.dominance - 0.5)) / 1.5;
}

double pos_rank_weight(PosTag pos) {
  switch (pos) {
    case PosTag::Verb: return 1.0;
    case PosTag::Noun: return 0.8;
    case PosTag::Adj: return 0.6;
    default: return 0.4;
  }
}

std::vector<GestureCandidate> join_candidates(const Sentence& sentence,
                                              std::span<const WordAffect> affect,
                                              std::span<const SchemaAnnotation> schemas,
                                              const SentenceTiming& timing) {
  std::map<std::size_t, const WordAffect*> by_index;
  for (const auto& wa : affect) by_index.emplace(wa.token_index, &wa);

  std::vector<GestureCandidate> out;
  for (const auto& ann : schemas) {
    const auto it = by_index.find(ann.token_index);
    if (it == by_index.end() || ann.token_index >= sentence.tokens.size()) continue;
    GestureCandidate c;
    c.token_index = ann.token_index;
    c.kind = GestureKind::Iconic;
    c.schema = ann.schema;
    c.schema_weight = ann.weight;
    c.pos = sentence.tokens[ann.token_index].pos;
    c.vad = it->second->vad;
    c.timing = timing.tokens.at(ann.token_index);
    out.push_back(c);
  }
  return out;
}

ScoreBreakdown score_candidate(const GestureCandidate& c, const RankWeights& w) {
  ScoreBreakdown b;
  b.extremity = extremity(c.vad);
  b.pos_weight = pos_rank_weight(c.pos);
  b.schema_weight = c.schema_weight;
  b.affect_term = w.affect * b.extremity;
  b.pos_term = w.pos * b.pos_weight;
  b.schema_term = w.schema * b.schema_weight;
  return b;
}

void score_candidates(std::span<GestureCandidate> candidates, const RankWeights& w) {
  for (auto& c : candidates) {
    c.breakdown = score_candidate(c, w);
    c.score = c.breakdown.affect_term + c.breakdown.pos_term + c.breakdown.schema_term;
  }
}

std::optional<GestureCandidate> rank_and_select(std::span<const GestureCandidate> candidates,
                                                const RankWeights& w) {
  w.validate();
  if (candidates.empty()) return std::nullopt;
  std::vector<GestureCandidate> scored(candidates.begin(), candidates.end());
  score_candidates(scored, w);

  const GestureCandidate* best = &scored.front();
  for (const auto& c : scored) {
    const double tol = kScoreTieTolerance * std::max(1.0, std::abs(best->score));
    if (c.score > best->score + tol ||
        (std::abs(c.score - best->score) <= tol && c.token_index < best->token_index))
      best = &c;
  }
  return *best;
}

std::optional<GestureCandidate> beat_fallback(const Sentence& sentence,
                                              std::span<const WordAffect> affect,
                                              const VadTriple& sentence_vad,
                                              const SentenceTiming& timing,
                                              const RankWeights& w) {
  const WordAffect* anchor = nullptr;
  for (const auto& wa : affect) {
    if (anchor == nullptr || extremity(wa.vad) > extremity(anchor->vad) ||
        (extremity(wa.vad) == extremity(anchor->vad) && wa.token_index < anchor->token_index))
      anchor = &wa;
  }
  if (anchor == nullptr) return std::nullopt;

  GestureCandidate c;
  c.token_index = anchor->token_index;
  c.kind = GestureKind::Beat;
  c.pos = sentence.tokens.at(anchor->token_index).pos;
  c.vad = sentence_vad;
  c.timing = timing.tokens.at(anchor->token_index);
  score_candidates(std::span(&c, 1), w);
  return c;
}

}  // namespace gestc
