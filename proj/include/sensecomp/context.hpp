#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sensecomp/embedding_store.hpp"

namespace sensecomp {

// A pre-tokenized, lowercased sentence with the position of the target
// lexeme and optional lemma / dependency annotations aligned to tokens.
struct AnnotatedSentence {
  std::vector<std::string> tokens;
  std::size_t target_index = 0;
  std::optional<std::vector<std::string>> lemmas;
  std::optional<std::vector<int>> dep_heads;  // 1-based, 0 = root
  std::optional<std::vector<std::string>> dep_labels;

  // Throws DataError if any invariant is broken.
  void validate() const;
  const std::string& target_token() const { return tokens.at(target_index); }
};

enum class ContextKind { bag_of_words, dependency };

// Which context to extract: a symmetric window of `radius`, or the
// first-order dependency neighbourhood.
struct ContextSpec {
  ContextKind kind = ContextKind::bag_of_words;
  int radius = 2;

  static ContextSpec bow(int radius);
  static ContextSpec dependency() { return {ContextKind::dependency, 0}; }
  // Accepts "1", "2", "4" or "dep".
  static ContextSpec parse(std::string_view text);
  std::string name() const;
};

struct ContextWindow {
  std::vector<std::string> words;
  std::string target_lemma;
  ContextSpec spec;
  bool empty() const { return words.empty(); }
};

using StopWords = StringSet;

StopWords default_stopwords();
StopWords load_stopwords(std::istream& in);
StopWords load_stopwords_file(const std::string& path);

// Removes stop words except the target. Dependency annotations survive only
// if no removed token is attached (as head or dependent) to a kept token.
AnnotatedSentence filter_stopwords(const AnnotatedSentence& s, const StopWords& stopwords);

// Up to `radius` tokens on each side of the target; the target is excluded.
ContextWindow extract_bow_window(const AnnotatedSentence& s, int radius);

// The target's head (unless root) plus its direct dependents, in sentence order.
ContextWindow extract_dep_context(const AnnotatedSentence& s);

// Stop-word filtering followed by the extraction named by `spec`. For
// dependency contexts the tree is read before filtering and stop words are
// then removed from the neighbourhood.
ContextWindow extract_context(const AnnotatedSentence& s, const ContextSpec& spec,
                              const StopWords& stopwords);

// CoNLL-U / CoNLL-X style 10-column rows. target_index is left at 0.
std::vector<AnnotatedSentence> read_conllu(std::istream& in);

// Whitespace tokenization, lowercasing, and removal of punctuation at token edges.
std::vector<std::string> tokenize(std::string_view raw);

// First position whose token or lemma equals `lemma` (case-insensitive).
std::optional<std::size_t> locate_target(const AnnotatedSentence& s, std::string_view lemma);

}  // namespace sensecomp
