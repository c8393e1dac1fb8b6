#include "sensecomp/inventory.hpp"

#include <fstream>
#include <set>
#include <utility>

#include "sensecomp/error.hpp"
#include "text_util.hpp"

namespace sensecomp {

using nlohmann::json;

std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::adjective:
      return "adjective";
    case Pos::noun:
      return "noun";
    case Pos::verb:
      return "verb";
  }
  return "noun";
}

std::optional<Pos> parse_pos(std::string_view text) {
  const std::string t = detail::to_lower(text);
  if (t == "adjective" || t == "adj" || t == "a" || t == "j") return Pos::adjective;
  if (t == "noun" || t == "n") return Pos::noun;
  if (t == "verb" || t == "v") return Pos::verb;
  return std::nullopt;
}

json sentence_to_json(const AnnotatedSentence& s) {
  json j = {{"tokens", s.tokens}, {"target_index", s.target_index}};
  if (s.lemmas) j["lemmas"] = *s.lemmas;
  if (s.dep_heads) j["heads"] = *s.dep_heads;
  if (s.dep_labels) j["labels"] = *s.dep_labels;
  return j;
}

namespace {

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw DataError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw DataError(std::string(what) + " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

AnnotatedSentence sentence_fields(const json& j) {
  if (!j.is_object() || !j.contains("tokens"))
    throw DataError("sentence record needs a \"tokens\" array");
  AnnotatedSentence s;
  for (auto& t : string_list(j.at("tokens"), "tokens")) s.tokens.push_back(detail::to_lower(t));
  if (j.contains("lemmas")) {
    s.lemmas.emplace();
    for (auto& l : string_list(j.at("lemmas"), "lemmas")) s.lemmas->push_back(detail::to_lower(l));
  }
  if (j.contains("heads")) {
    const auto& h = j.at("heads");
    if (!h.is_array()) throw DataError("heads must be an array");
    s.dep_heads.emplace();
    for (const auto& v : h) {
      if (!v.is_number_integer()) throw DataError("heads must contain integers");
      s.dep_heads->push_back(v.get<int>());
    }
  }
  if (j.contains("labels")) s.dep_labels = string_list(j.at("labels"), "labels");
  return s;
}

}  // namespace

AnnotatedSentence sentence_from_json(const json& j) {
  AnnotatedSentence s = sentence_fields(j);
  if (!j.contains("target_index") || !j.at("target_index").is_number_unsigned())
    throw DataError("sentence record needs a non-negative \"target_index\"");
  s.target_index = j.at("target_index").get<std::size_t>();
  s.validate();
  return s;
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw DataError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string() || v.get<std::string>().empty())
    throw DataError(where + ": \"" + key + "\" must be a nonempty string");
  return v.get<std::string>();
}

// nullopt when the target cannot be located.
std::optional<AnnotatedSentence> read_example(const json& ex, const std::string& lemma,
                                              const std::string& where) {
  AnnotatedSentence s;
  if (ex.is_string()) {
    s.tokens = tokenize(ex.get<std::string>());
  } else if (ex.is_object()) {
    s = sentence_fields(ex);
    if (ex.contains("target_index")) {
      if (!ex.at("target_index").is_number_unsigned())
        throw DataError(where + ": target_index must be a non-negative integer");
      s.target_index = ex.at("target_index").get<std::size_t>();
      if (s.tokens.empty()) return std::nullopt;
      s.validate();
      return s;
    }
  } else {
    throw DataError(where + ": example must be a string or an object");
  }
  if (s.tokens.empty()) return std::nullopt;
  auto pos = locate_target(s, lemma);
  if (!pos) return std::nullopt;
  s.target_index = *pos;
  s.validate();
  return s;
}

bool same_sentence(const AnnotatedSentence& a, const AnnotatedSentence& b) {
  return a.tokens == b.tokens;
}

}  // namespace

SenseInventory ingest_inventory(const json& doc, IngestReport* report) {
  IngestReport local;
  IngestReport& rep = report ? *report : local;

  const json& lexemes = require(doc, "lexemes", "inventory");
  if (!lexemes.is_array()) throw DataError("inventory: \"lexemes\" must be an array");

  SenseInventory inv;
  std::set<std::pair<std::string, Pos>> seen_lexemes;
  for (std::size_t li = 0; li < lexemes.size(); ++li) {
    const json& lx = lexemes[li];
    const std::string where = "lexemes[" + std::to_string(li) + "]";
    Lexeme lexeme;
    lexeme.lemma = detail::to_lower(require_string(lx, "lemma", where));
    const std::string pos_text = require_string(lx, "pos", where);
    auto pos = parse_pos(pos_text);
    if (!pos) throw DataError(where + ": unknown part of speech '" + pos_text + "'");
    lexeme.pos = *pos;
    const std::string lex_name = lexeme.lemma + "/" + std::string(to_string(lexeme.pos));
    if (!seen_lexemes.emplace(lexeme.lemma, lexeme.pos).second)
      throw DataError(where + ": duplicate lexeme " + lex_name);

    const json& senses = require(lx, "senses", where);
    if (!senses.is_array()) throw DataError(where + ": \"senses\" must be an array");
    std::set<std::string> seen_senses;
    for (std::size_t si = 0; si < senses.size(); ++si) {
      const json& sj = senses[si];
      const std::string swhere = where + ".senses[" + std::to_string(si) + "]";
      Sense sense;
      sense.sense_id = require_string(sj, "sense_id", swhere);
      if (!seen_senses.insert(sense.sense_id).second)
        throw DataError(swhere + ": duplicate sense_id '" + sense.sense_id + "' in " + lex_name);
      if (sj.contains("definition")) {
        if (!sj.at("definition").is_string())
          throw DataError(swhere + ": \"definition\" must be a string");
        sense.definition = sj.at("definition").get<std::string>();
      }
      const json& examples = require(sj, "examples", swhere);
      if (!examples.is_array()) throw DataError(swhere + ": \"examples\" must be an array");
      for (std::size_t ei = 0; ei < examples.size(); ++ei) {
        const std::string ewhere = swhere + ".examples[" + std::to_string(ei) + "]";
        auto ex = read_example(examples[ei], lexeme.lemma, ewhere);
        if (!ex) {
          ++rep.dropped_examples;
          rep.messages.push_back(ewhere + ": target '" + lexeme.lemma + "' not found, dropped");
          continue;
        }
        bool repeated = false;
        for (const auto& kept : sense.examples) repeated = repeated || same_sentence(kept, *ex);
        if (repeated) {
          ++rep.duplicate_examples;
          rep.messages.push_back(ewhere + ": repeated example, dropped");
          continue;
        }
        sense.examples.push_back(std::move(*ex));
      }
      lexeme.senses.push_back(std::move(sense));
    }
    inv.lexemes.push_back(std::move(lexeme));
  }
  return inv;
}

SenseInventory ingest_inventory(std::istream& in, IngestReport* report) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("inventory is not valid JSON: ") + e.what());
  }
  return ingest_inventory(doc, report);
}

SenseInventory ingest_inventory_file(const std::string& path, IngestReport* report) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open inventory '" + path + "'");
  return ingest_inventory(in, report);
}

}  // namespace sensecomp
