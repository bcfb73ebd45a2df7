#pragma once

// End-to-end orchestration: text -> analyzed sentences -> per-sentence
// gesture plans -> gesture script / stage trace.
//
// Text analysis and timing run once over the whole input (timing is a running
// clock). Everything after that is independent per sentence and runs either
// through the serial reference loop or an OpenMP loop; both produce identical
// plans.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gestc/lexicon.hpp"
#include "gestc/planner.hpp"
#include "gestc/robot.hpp"
#include "gestc/script.hpp"
#include "gestc/timing.hpp"

namespace gestc {

/// Raised for unusable resources or settings, before any text is processed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ResourcePaths {
  std::filesystem::path vad_lexicon;
  std::filesystem::path schema_lexicon;
  std::filesystem::path pos_resources;
  std::optional<std::filesystem::path> robot_model;  // built-in model when empty
};

struct Resources {
  VadLexicon vad;
  SchemaLexicon schemas;
  PosResources pos;
  RobotModel robot = RobotModel::default_model();
};

struct PipelineOptions {
  TimingConfig timing;
  RankWeights weights;
  double sample_rate_hz = 50.0;
  /// 1 runs the serial reference loop; >1 plans sentences on that many threads.
  int jobs = 1;

  /// Throws ConfigError on any invalid setting.
  void validate() const;
};

Resources load_resources(const ResourcePaths& paths);

/// Split, tokenize, tag, filter and time every sentence. The returned plans
/// carry only the text-stage fields.
std::vector<SentencePlan> analyze_text(std::string_view text, const Resources& res,
                                       const TimingConfig& timing);

/// Affect, schema, join, rank (beat fallback), schedule, retarget, interpolate.
void plan_sentence(SentencePlan& plan, const Resources& res, const PipelineOptions& opts);

void plan_sentences_serial(std::vector<SentencePlan>& plans, const Resources& res,
                           const PipelineOptions& opts);
void plan_sentences_parallel(std::vector<SentencePlan>& plans, const Resources& res,
                             const PipelineOptions& opts, int threads);

struct PipelineResult {
  std::vector<SentencePlan> plans;
  GestureScript script;
};

/// Errors surface as StageError labelled with the failing stage.
PipelineResult run_pipeline(std::string_view text, const Resources& res,
                            const PipelineOptions& opts);

/// Number of stage records emitted per sentence by `explain_trace`.
inline constexpr std::size_t kTraceStageCount = 8;

/// Per-sentence intermediate outputs of every stage as a JSON document.
std::string explain_trace(std::string_view text, std::span<const SentencePlan> plans,
                          const PipelineOptions& opts);

}  // namespace gestc
