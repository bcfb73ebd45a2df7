#include "gestc/script.hpp"

#include "gestc/json_writer.hpp"

namespace gestc {

namespace {

void write_interval(JsonWriter& w, std::string_view name, const Interval& iv) {
  w.key(name).begin_object(true);
  w.key("start_s").value(iv.start_s);
  w.key("end_s").value(iv.end_s);
  w.end_object();
}

void write_word(JsonWriter& w, const WordRecord& word) {
  w.begin_object(true);
  w.key("surface").value(word.surface);
  w.key("lemma").value(word.lemma);
  w.key("pos").value(to_string(word.pos));
  w.key("start_s").value(word.timing.start_s);
  w.key("duration_s").value(word.timing.duration_s);
  w.key("vad");
  if (word.vad) {
    w.begin_object(true);
    w.key("v").value(word.vad->valence);
    w.key("a").value(word.vad->arousal);
    w.key("d").value(word.vad->dominance);
    w.end_object();
  } else {
    w.null();
  }
  w.key("schema");
  if (word.schema) w.value(to_string(*word.schema)); else w.null();
  w.end_object();
}

void write_gesture(JsonWriter& w, const GestureRecord& g) {
  w.begin_object();
  w.key("kind").value(to_string(g.kind));
  w.key("schema");
  if (g.schema) w.value(to_string(*g.schema)); else w.null();
  w.key("word_index").value(static_cast<std::int64_t>(g.word_index));
  w.key("params").begin_object(true);
  w.key("speed_factor").value(g.params.speed_factor);
  w.key("amplitude_factor").value(g.params.amplitude_factor);
  w.key("vertical_bias").value(g.params.vertical_bias);
  w.end_object();
  w.key("phases").begin_object();
  write_interval(w, "prep", g.phases.prep);
  write_interval(w, "stroke", g.phases.stroke);
  write_interval(w, "retract", g.phases.retract);
  w.end_object();
  w.key("trajectory").begin_object();
  w.key("joints").begin_array(true);
  for (const auto& name : g.trajectory.joint_names) w.value(name);
  w.end_array();
  w.key("points").begin_array();
  for (const auto& p : g.trajectory.points) {
    w.begin_object(true);
    w.key("t_s").value(p.t_s);
    w.key("positions").begin_array();
    for (const double q : p.positions) w.value(q);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  w.end_object();
}

}  // namespace

GestureScript assemble_script(std::string_view text, std::span<const SentencePlan> plans) {
  GestureScript script;
  script.text = std::string(text);
  for (const auto& plan : plans) {
    SentenceRecord rec;
    rec.index = plan.sentence.index;
    rec.text = plan.sentence.text;
    for (const auto& t : plan.sentence.tokens) {
      WordRecord word{t.surface, t.lemma, t.pos, plan.timing.tokens.at(t.index), {}, {}};
      for (const auto& wa : plan.affect)
        if (wa.token_index == t.index) word.vad = wa.vad;
      for (const auto& ann : plan.schemas)
        if (ann.token_index == t.index) word.schema = ann.schema;
      rec.words.push_back(std::move(word));
    }
    if (plan.selected) {
      GestureRecord g;
      g.kind = plan.selected->kind;
      g.schema = plan.selected->schema;
      g.word_index = plan.selected->token_index;
      g.params = plan.params;
      g.phases = plan.phases;
      g.trajectory = plan.trajectory;
      rec.gesture = std::move(g);
    }
    script.sentences.push_back(std::move(rec));
  }
  return script;
}

std::string script_to_json(const GestureScript& script) {
  JsonWriter w;
  w.begin_object();
  w.key("version").value(script.version);
  w.key("text").value(script.text);
  w.key("sentences").begin_array();
  for (const auto& s : script.sentences) {
    w.begin_object();
    w.key("index").value(static_cast<std::int64_t>(s.index));
    w.key("text").value(s.text);
    w.key("words").begin_array();
    for (const auto& word : s.words) write_word(w, word);
    w.end_array();
    w.key("gesture");
    if (s.gesture) write_gesture(w, *s.gesture); else w.null();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string script_to_csv(const GestureScript& script) {
  std::string out = "t_s";
  for (const auto& name : kJointNames) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (const auto& s : script.sentences) {
    if (!s.gesture) continue;
    for (const auto& p : s.gesture->trajectory.points) {
      out += format_fixed6(p.t_s);
      for (const double q : p.positions) {
        out += ',';
        out += format_fixed6(q);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace gestc
