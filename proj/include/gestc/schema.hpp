#pragma once

#include <cstddef>
#include <vector>

#include "gestc/lexicon.hpp"
#include "gestc/text.hpp"
#include "gestc/types.hpp"

namespace gestc {

struct SchemaAnnotation {
  std::size_t token_index = 0;
  ImageSchemaTag schema = ImageSchemaTag::Object;
  double weight = 0.0;
};

/// At most one annotation per content token: its highest-weight schema, ties
/// resolved by inventory order. Tokens without a lexicon entry are skipped.
std::vector<SchemaAnnotation> map_schemas(const Sentence& sentence, const SchemaLexicon& lexicon);

}  // namespace gestc
