#include "gestc/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>

#include "json.hpp"

namespace gestc {

namespace {

using Kind = LexiconError::Kind;
using nlohmann::json;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<double> parse_number(std::string_view field) {
  field = trim(field);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::string normalize_key(std::string_view raw) { return to_lower(trim(raw)); }

json parse_document(std::istream& source) {
  try {
    return json::parse(source);
  } catch (const json::parse_error& e) {
    throw LexiconError(Kind::ParseError, std::string("invalid document: ") + e.what());
  }
}

const json& require_member(const json& doc, const char* key, json::value_t type) {
  if (!doc.is_object() || !doc.contains(key) || doc.at(key).type() != type)
    throw LexiconError(Kind::ParseError, std::string("missing or mistyped member '") + key + "'");
  return doc.at(key);
}

PosTag require_pos_tag(const json& value, const std::string& context) {
  if (!value.is_string())
    throw LexiconError(Kind::ParseError, "POS tag for '" + context + "' must be a string");
  const auto tag = parse_pos_tag(value.get<std::string>());
  if (!tag)
    throw LexiconError(Kind::UnknownPosTag,
                       "unknown POS tag '" + value.get<std::string>() + "' for '" + context + "'", 0,
                       context);
  return *tag;
}

}  // namespace

std::optional<VadTriple> VadLexicon::find(std::string_view lemma) const {
  const auto it = entries_.find(lemma);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

VadLexicon load_vad_lexicon(std::istream& source) {
  VadLexicon::Map entries;
  std::vector<LoadWarning> warnings;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() != 4)
      throw LexiconError(Kind::MalformedLine,
                         "line " + std::to_string(line_no) + ": expected 4 tab-separated fields",
                         line_no);
    std::string key = normalize_key(fields[0]);
    if (key.empty())
      throw LexiconError(Kind::MalformedLine, "line " + std::to_string(line_no) + ": empty word",
                         line_no);

    double values[3];
    for (std::size_t i = 0; i < 3; ++i) {
      const auto parsed = parse_number(fields[i + 1]);
      if (!parsed)
        throw LexiconError(Kind::MalformedLine,
                           "line " + std::to_string(line_no) + ": non-numeric value", line_no, key);
      if (*parsed < 0.0 || *parsed > 1.0)
        throw LexiconError(Kind::OutOfRange,
                           "line " + std::to_string(line_no) + ": value outside [0,1]", line_no, key);
      values[i] = *parsed;
    }

    if (entries.contains(key)) {
      warnings.push_back({line_no, "duplicate entry '" + key + "' ignored"});
      continue;
    }
    entries.emplace(std::move(key), VadTriple{values[0], values[1], values[2]});
  }
  return VadLexicon(std::move(entries), std::move(warnings));
}

const std::vector<SchemaWeight>* SchemaLexicon::find(std::string_view lemma) const {
  const auto it = entries_.find(lemma);
  return it == entries_.end() ? nullptr : &it->second;
}

SchemaLexicon load_schema_lexicon(std::istream& source) {
  const json doc = parse_document(source);
  const json& entries = require_member(doc, "entries", json::value_t::object);

  SchemaLexicon::Map map;
  for (const auto& [raw_lemma, list] : entries.items()) {
    std::string lemma = normalize_key(raw_lemma);
    if (lemma.empty()) throw LexiconError(Kind::ParseError, "empty lemma in schema lexicon");
    if (map.contains(lemma))
      throw LexiconError(Kind::ParseError, "duplicate lemma '" + lemma + "'", 0, lemma);
    if (!list.is_array() || list.empty())
      throw LexiconError(Kind::ParseError, "schema list for '" + lemma + "' must be a non-empty array",
                         0, lemma);

    std::vector<SchemaWeight> weights;
    for (const auto& item : list) {
      if (!item.is_object() || !item.contains("schema") || !item.at("schema").is_string())
        throw LexiconError(Kind::ParseError, "schema entry for '" + lemma + "' lacks a schema name",
                           0, lemma);
      const auto name = item.at("schema").get<std::string>();
      const auto tag = parse_schema_tag(name);
      if (!tag)
        throw LexiconError(Kind::UnknownSchemaTag, "unknown schema '" + name + "' for '" + lemma + "'",
                           0, lemma);
      if (!item.contains("weight") || !item.at("weight").is_number())
        throw LexiconError(Kind::InvalidWeight, "missing weight for '" + lemma + "'", 0, lemma);
      const double w = item.at("weight").get<double>();
      if (!(w > 0.0 && w <= 1.0))
        throw LexiconError(Kind::InvalidWeight, "weight outside (0,1] for '" + lemma + "'", 0, lemma);
      const bool duplicate = std::any_of(weights.begin(), weights.end(),
                                         [&](const SchemaWeight& sw) { return sw.schema == *tag; });
      if (duplicate)
        throw LexiconError(Kind::ParseError, "duplicate schema '" + name + "' for '" + lemma + "'",
                           0, lemma);
      weights.push_back({*tag, w});
    }
    // Descending weight; equal weights keep inventory order.
    std::sort(weights.begin(), weights.end(), [](const SchemaWeight& a, const SchemaWeight& b) {
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.schema < b.schema;
    });
    map.emplace(std::move(lemma), std::move(weights));
  }
  return SchemaLexicon(std::move(map));
}

std::string serialize_schema_lexicon(const SchemaLexicon& lexicon) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [lemma, weights] : lexicon.entries()) {
    auto list = nlohmann::ordered_json::array();
    for (const auto& sw : weights)
      list.push_back({{"schema", std::string(to_string(sw.schema))}, {"weight", sw.weight}});
    entries[lemma] = std::move(list);
  }
  nlohmann::ordered_json doc;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

PosResources load_pos_resources(std::istream& source) {
  const json doc = parse_document(source);
  PosResources res;

  for (const auto& [raw, tag] : require_member(doc, "tags", json::value_t::object).items()) {
    const std::string key = normalize_key(raw);
    if (key.empty()) throw LexiconError(Kind::ParseError, "empty key in tag lexicon");
    res.tag_lexicon.insert_or_assign(key, require_pos_tag(tag, key));
  }

  for (const auto& rule : require_member(doc, "suffix_rules", json::value_t::array)) {
    if (!rule.is_array() || rule.size() != 2 || !rule[0].is_string())
      throw LexiconError(Kind::ParseError, "suffix rule must be [suffix, tag]");
    const std::string suffix = normalize_key(rule[0].get<std::string>());
    if (suffix.empty()) throw LexiconError(Kind::ParseError, "empty suffix in suffix rule");
    res.suffix_rules.emplace_back(suffix, require_pos_tag(rule[1], suffix));
  }

  for (const auto& word : require_member(doc, "stopwords", json::value_t::array)) {
    if (!word.is_string()) throw LexiconError(Kind::ParseError, "stopwords must be strings");
    res.stopwords.insert(normalize_key(word.get<std::string>()));
  }

  if (doc.contains("lemma_exceptions")) {
    const json& exc = require_member(doc, "lemma_exceptions", json::value_t::object);
    for (const auto& [surface, lemma] : exc.items()) {
      if (!lemma.is_string()) throw LexiconError(Kind::ParseError, "lemma exception must map to a string");
      res.lemma_exceptions.insert_or_assign(normalize_key(surface), normalize_key(lemma.get<std::string>()));
    }
  }

  if (doc.contains("negators")) {
    res.negators.clear();
    for (const auto& word : require_member(doc, "negators", json::value_t::array)) {
      if (!word.is_string()) throw LexiconError(Kind::ParseError, "negators must be strings");
      res.negators.insert(normalize_key(word.get<std::string>()));
    }
  }
  return res;
}

}  // namespace gestc
