#include "gestc/pipeline.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <utility>

#include <omp.h>

#include "gestc/json_writer.hpp"

namespace gestc {

namespace {

// Runs `f`, relabelling library errors with the stage name.
template <class F>
decltype(auto) stage(const char* name, F&& f) {
  try {
    return std::forward<F>(f)();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e.what());
  }
}

std::ifstream open_resource(const std::filesystem::path& path, const char* what) {
  std::error_code ec;
  if (path.empty() || !std::filesystem::is_regular_file(path, ec))
    throw ConfigError(std::string(what) + " not found: '" + path.string() + "'");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(std::string(what) + " unreadable: '" + path.string() + "'");
  return in;
}

template <class Loader>
auto load(const std::filesystem::path& path, const char* what, Loader loader) {
  auto in = open_resource(path, what);
  try {
    return loader(in);
  } catch (const Error& e) {
    throw ConfigError(std::string(what) + " '" + path.string() + "': " + e.what());
  }
}

void write_vad(JsonWriter& w, const VadTriple& vad) {
  w.begin_object(true);
  w.key("v").value(vad.valence);
  w.key("a").value(vad.arousal);
  w.key("d").value(vad.dominance);
  w.end_object();
}

void write_interval(JsonWriter& w, const char* name, const Interval& iv) {
  w.key(name).begin_object(true);
  w.key("start_s").value(iv.start_s);
  w.key("end_s").value(iv.end_s);
  w.end_object();
}

void write_stage_header(JsonWriter& w, const char* name) {
  w.begin_object();
  w.key("stage").value(name);
  w.key("output");
}

void write_sentence_trace(JsonWriter& w, const SentencePlan& p) {
  const auto& tokens = p.sentence.tokens;
  w.key("stages").begin_array();

  write_stage_header(w, "tag");
  w.begin_array();
  for (const auto& t : tokens) {
    w.begin_object(true);
    w.key("index").value(static_cast<std::int64_t>(t.index));
    w.key("surface").value(t.surface);
    w.key("lemma").value(t.lemma);
    w.key("pos").value(to_string(t.pos));
    w.key("is_content").value(t.is_content);
    w.end_object();
  }
  w.end_array();
  w.end_object();

  write_stage_header(w, "filter");
  w.begin_array(true);
  for (const auto& t : filter_words(tokens)) w.value(static_cast<std::int64_t>(t.index));
  w.end_array();
  w.end_object();

  write_stage_header(w, "timing");
  w.begin_array();
  for (const auto& t : tokens) {
    w.begin_object(true);
    w.key("index").value(static_cast<std::int64_t>(t.index));
    w.key("start_s").value(p.timing.tokens.at(t.index).start_s);
    w.key("duration_s").value(p.timing.tokens.at(t.index).duration_s);
    w.end_object();
  }
  w.end_array();
  w.end_object();

  write_stage_header(w, "affect");
  w.begin_object();
  w.key("sentence_vad");
  write_vad(w, p.sentence_vad);
  w.key("words").begin_array();
  for (const auto& wa : p.affect) {
    w.begin_object(true);
    w.key("index").value(static_cast<std::int64_t>(wa.token_index));
    w.key("vad");
    write_vad(w, wa.vad);
    w.key("source").value(to_string(wa.source));
    w.end_object();
  }
  w.end_array();
  w.end_object();
  w.end_object();

  write_stage_header(w, "schema");
  w.begin_array();
  for (const auto& a : p.schemas) {
    w.begin_object(true);
    w.key("index").value(static_cast<std::int64_t>(a.token_index));
    w.key("schema").value(to_string(a.schema));
    w.key("weight").value(a.weight);
    w.end_object();
  }
  w.end_array();
  w.end_object();

  auto write_candidate = [&](const GestureCandidate& c) {
    w.begin_object(true);
    w.key("index").value(static_cast<std::int64_t>(c.token_index));
    w.key("kind").value(to_string(c.kind));
    w.key("schema");
    if (c.schema) w.value(to_string(*c.schema)); else w.null();
    w.key("score").value(c.score);
    w.key("breakdown").begin_object();
    w.key("extremity").value(c.breakdown.extremity);
    w.key("pos_weight").value(c.breakdown.pos_weight);
    w.key("schema_weight").value(c.breakdown.schema_weight);
    w.key("affect_term").value(c.breakdown.affect_term);
    w.key("pos_term").value(c.breakdown.pos_term);
    w.key("schema_term").value(c.breakdown.schema_term);
    w.end_object();
    w.end_object();
  };

  write_stage_header(w, "candidates");
  w.begin_array();
  for (const auto& c : p.candidates) write_candidate(c);
  w.end_array();
  w.end_object();

  write_stage_header(w, "selection");
  if (p.selected) {
    w.begin_object();
    w.key("candidate");
    write_candidate(*p.selected);
    w.key("params").begin_object(true);
    w.key("speed_factor").value(p.params.speed_factor);
    w.key("amplitude_factor").value(p.params.amplitude_factor);
    w.key("vertical_bias").value(p.params.vertical_bias);
    w.end_object();
    w.end_object();
  } else {
    w.null();
  }
  w.end_object();

  write_stage_header(w, "phases");
  if (p.selected) {
    w.begin_object();
    write_interval(w, "prep", p.phases.prep);
    write_interval(w, "stroke", p.phases.stroke);
    write_interval(w, "retract", p.phases.retract);
    w.end_object();
  } else {
    w.null();
  }
  w.end_object();

  w.end_array();
}

}  // namespace

void PipelineOptions::validate() const {
  try {
    timing.validate();
    weights.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz))
    throw ConfigError("sample rate must be positive");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

Resources load_resources(const ResourcePaths& paths) {
  Resources res;
  res.vad = load(paths.vad_lexicon, "VAD lexicon", [](std::istream& in) { return load_vad_lexicon(in); });
  res.schemas = load(paths.schema_lexicon, "schema lexicon",
                     [](std::istream& in) { return load_schema_lexicon(in); });
  res.pos = load(paths.pos_resources, "POS resources",
                 [](std::istream& in) { return load_pos_resources(in); });
  if (paths.robot_model)
    res.robot = load(*paths.robot_model, "robot model", [](std::istream& in) { return load_robot_model(in); });
  return res;
}

std::vector<SentencePlan> analyze_text(std::string_view text, const Resources& res,
                                       const TimingConfig& timing) {
  std::vector<Sentence> sentences = stage("split", [&] { return split_sentences(text); });
  stage("tokenize", [&] {
    for (auto& s : sentences) tokenize(s);
  });
  stage("tag", [&] {
    for (auto& s : sentences) tag_and_lemmatize(s.tokens, res.pos);
  });
  auto timings = stage("timing", [&] { return estimate_timing(sentences, timing); });

  std::vector<SentencePlan> plans(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    plans[i].sentence = std::move(sentences[i]);
    plans[i].timing = std::move(timings[i]);
  }
  return plans;
}

void plan_sentence(SentencePlan& plan, const Resources& res, const PipelineOptions& opts) {
  const Sentence& s = plan.sentence;
  stage("affect", [&] {
    plan.sentence_vad = sentence_sentiment(s, res.vad, res.pos.negators);
    plan.affect = assign_affect(s, res.vad, plan.sentence_vad);
  });
  plan.schemas = stage("schema", [&] { return map_schemas(s, res.schemas); });
  stage("join", [&] {
    plan.candidates = join_candidates(s, plan.affect, plan.schemas, plan.timing);
    score_candidates(plan.candidates, opts.weights);
  });
  plan.selected = stage("rank", [&] {
    auto best = rank_and_select(plan.candidates, opts.weights);
    if (!best) best = beat_fallback(s, plan.affect, plan.sentence_vad, plan.timing, opts.weights);
    return best;
  });
  if (!plan.selected) return;

  const GestureTemplate& tmpl =
      plan.selected->schema ? lookup_template(*plan.selected->schema) : beat_template();
  stage("params", [&] {
    plan.params = extract_params(plan.selected->vad);
    plan.scaled = apply_params(tmpl, plan.params, gesture_rest_points(res.robot));
  });
  plan.phases = stage("schedule", [&] {
    const SentenceBounds bounds{plan.timing.start_s, plan.timing.end_s, opts.timing.sentence_pause_s};
    return schedule_phases(plan.selected->timing, plan.params, bounds);
  });
  plan.keyframes = stage("retarget", [&] { return retarget(plan.scaled, tmpl.handedness, res.robot); });
  plan.trajectory = stage("interpolate", [&] {
    return interpolate(plan.keyframes, rest_joint_vector(res.robot), plan.phases, opts.sample_rate_hz);
  });
}

void plan_sentences_serial(std::vector<SentencePlan>& plans, const Resources& res,
                           const PipelineOptions& opts) {
  for (auto& p : plans) plan_sentence(p, res, opts);
}

void plan_sentences_parallel(std::vector<SentencePlan>& plans, const Resources& res,
                             const PipelineOptions& opts, int threads) {
  const auto n = static_cast<std::ptrdiff_t>(plans.size());
  std::vector<std::exception_ptr> errors(plans.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      plan_sentence(plans[static_cast<std::size_t>(i)], res, opts);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  // Report the first failing sentence, as the serial loop would.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

PipelineResult run_pipeline(std::string_view text, const Resources& res,
                            const PipelineOptions& opts) {
  opts.validate();
  PipelineResult out;
  out.plans = analyze_text(text, res, opts.timing);
  if (opts.jobs > 1)
    plan_sentences_parallel(out.plans, res, opts, opts.jobs);
  else
    plan_sentences_serial(out.plans, res, opts);
  out.script = stage("assemble", [&] { return assemble_script(text, out.plans); });
  return out;
}

std::string explain_trace(std::string_view text, std::span<const SentencePlan> plans,
                          const PipelineOptions& opts) {
  JsonWriter w(NumberFormat::RoundTrip);
  w.begin_object();
  w.key("version").value(1);
  w.key("text").value(text);
  w.key("weights").begin_object(true);
  w.key("affect").value(opts.weights.affect);
  w.key("pos").value(opts.weights.pos);
  w.key("schema").value(opts.weights.schema);
  w.end_object();
  w.key("sentences").begin_array();
  for (const auto& p : plans) {
    w.begin_object();
    w.key("index").value(static_cast<std::int64_t>(p.sentence.index));
    w.key("text").value(p.sentence.text);
    write_sentence_trace(w, p);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace gestc
