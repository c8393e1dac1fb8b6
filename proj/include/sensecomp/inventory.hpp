#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sensecomp/context.hpp"

namespace sensecomp {

enum class Pos { adjective, noun, verb };

std::string_view to_string(Pos pos);
// Accepts full names and the common short tags (adj, n, v, ...).
std::optional<Pos> parse_pos(std::string_view text);
inline constexpr Pos kAllPos[] = {Pos::adjective, Pos::noun, Pos::verb};

struct Sense {
  std::string sense_id;
  std::string definition;
  std::vector<AnnotatedSentence> examples;
};

struct Lexeme {
  std::string lemma;
  Pos pos = Pos::noun;
  std::vector<Sense> senses;
};

struct SenseInventory {
  std::vector<Lexeme> lexemes;
};

struct IngestReport {
  std::size_t dropped_examples = 0;
  std::size_t duplicate_examples = 0;
  std::vector<std::string> messages;
};

// Inventory document:
//
//   {"lexemes": [{"lemma": "black", "pos": "adjective",
//                 "senses": [{"sense_id": "...", "definition": "...",
//                             "examples": ["raw sentence", {"tokens": [...],
//                                          "target_index": 3}, ...]}]}]}
//
// Raw sentences are tokenized and the target located by lemma. Examples
// without a locatable target, and repeated examples of a sense, are dropped
// and reported. Schema violations and duplicate (lemma, pos) or sense_id
// entries throw DataError.
SenseInventory ingest_inventory(const nlohmann::json& doc, IngestReport* report = nullptr);
SenseInventory ingest_inventory(std::istream& in, IngestReport* report = nullptr);
SenseInventory ingest_inventory_file(const std::string& path, IngestReport* report = nullptr);

// Sentence <-> {"tokens", "target_index", optional "lemmas", "heads", "labels"}.
nlohmann::json sentence_to_json(const AnnotatedSentence& s);
AnnotatedSentence sentence_from_json(const nlohmann::json& j);

}  // namespace sensecomp
