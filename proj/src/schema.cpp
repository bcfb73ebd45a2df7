#include "gestc/schema.hpp"

namespace gestc {

std::vector<SchemaAnnotation> map_schemas(const Sentence& sentence, const SchemaLexicon& lexicon) {
  std::vector<SchemaAnnotation> out;
  for (const auto& t : sentence.tokens) {
    if (!t.is_content) continue;
    const auto* weights = lexicon.find(t.lemma);
    if (weights == nullptr || weights->empty()) continue;

    const SchemaWeight* best = &weights->front();
    for (const auto& sw : *weights) {
      if (sw.weight > best->weight || (sw.weight == best->weight && sw.schema < best->schema))
        best = &sw;
    }
    out.push_back({t.index, best->schema, best->weight});
  }
  return out;
}

}  // namespace gestc
