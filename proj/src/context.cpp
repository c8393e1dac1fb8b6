#include "sensecomp/context.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "sensecomp/error.hpp"
#include "text_util.hpp"

namespace sensecomp {

void AnnotatedSentence::validate() const {
  if (tokens.empty()) throw DataError("sentence has no tokens");
  if (target_index >= tokens.size()) {
    throw DataError("target index " + std::to_string(target_index) + " outside sentence of " +
                    std::to_string(tokens.size()) + " tokens");
  }
  if (lemmas && lemmas->size() != tokens.size())
    throw DataError("lemma annotation length differs from token count");
  if (dep_labels && dep_labels->size() != tokens.size())
    throw DataError("dependency label annotation length differs from token count");
  if (dep_heads) {
    if (dep_heads->size() != tokens.size())
      throw DataError("dependency head annotation length differs from token count");
    for (int h : *dep_heads) {
      if (h < 0 || static_cast<std::size_t>(h) > tokens.size())
        throw DataError("dependency head " + std::to_string(h) + " out of range");
    }
  }
}

ContextSpec ContextSpec::bow(int radius) {
  if (radius < 1) throw UsageError("window radius must be at least 1");
  return {ContextKind::bag_of_words, radius};
}

ContextSpec ContextSpec::parse(std::string_view text) {
  if (text == "dep") return dependency();
  if (text == "1" || text == "2" || text == "4") return bow(text[0] - '0');
  throw UsageError("context must be one of 1, 2, 4, dep (got '" + std::string(text) + "')");
}

std::string ContextSpec::name() const {
  return kind == ContextKind::dependency ? "dep" : "bow" + std::to_string(radius);
}

StopWords load_stopwords(std::istream& in) {
  StopWords out;
  std::string line;
  while (std::getline(in, line)) {
    auto word = detail::trim(line);
    if (word.empty() || word.front() == '#') continue;
    out.insert(detail::to_lower(word));
  }
  return out;
}

StopWords load_stopwords_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stop-word list '" + path + "'");
  return load_stopwords(in);
}

AnnotatedSentence filter_stopwords(const AnnotatedSentence& s, const StopWords& stopwords) {
  s.validate();
  const std::size_t n = s.tokens.size();
  std::vector<bool> keep(n);
  for (std::size_t i = 0; i < n; ++i)
    keep[i] = i == s.target_index || !stopwords.contains(s.tokens[i]);
  if (std::all_of(keep.begin(), keep.end(), [](bool k) { return k; })) return s;

  // new 1-based position of each kept token
  std::vector<int> remap(n + 1, 0);
  AnnotatedSentence out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    if (i == s.target_index) out.target_index = out.tokens.size();
    out.tokens.push_back(s.tokens[i]);
    remap[i + 1] = static_cast<int>(out.tokens.size());
  }
  if (s.lemmas) {
    out.lemmas.emplace();
    for (std::size_t i = 0; i < n; ++i)
      if (keep[i]) out.lemmas->push_back((*s.lemmas)[i]);
  }

  if (s.dep_heads) {
    const auto& heads = *s.dep_heads;
    bool broken = false;
    for (std::size_t i = 0; i < n && !broken; ++i) {
      const int h = heads[i];
      if (h == 0) continue;
      const bool dep_kept = keep[i], head_kept = keep[h - 1];
      broken = dep_kept != head_kept;
    }
    if (!broken) {
      out.dep_heads.emplace();
      for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) out.dep_heads->push_back(heads[i] == 0 ? 0 : remap[heads[i]]);
      if (s.dep_labels) {
        out.dep_labels.emplace();
        for (std::size_t i = 0; i < n; ++i)
          if (keep[i]) out.dep_labels->push_back((*s.dep_labels)[i]);
      }
    }
  }
  return out;
}

namespace {

std::string target_lemma_of(const AnnotatedSentence& s) {
  if (s.lemmas) return detail::to_lower((*s.lemmas)[s.target_index]);
  return s.tokens[s.target_index];
}

}  // namespace

ContextWindow extract_bow_window(const AnnotatedSentence& s, int radius) {
  s.validate();
  if (radius < 1) throw UsageError("window radius must be at least 1");
  ContextWindow w;
  w.spec = ContextSpec::bow(radius);
  w.target_lemma = target_lemma_of(s);
  const std::size_t r = static_cast<std::size_t>(radius);
  const std::size_t lo = s.target_index >= r ? s.target_index - r : 0;
  const std::size_t hi = std::min(s.tokens.size(), s.target_index + r + 1);
  for (std::size_t i = lo; i < hi; ++i)
    if (i != s.target_index) w.words.push_back(s.tokens[i]);
  return w;
}

ContextWindow extract_dep_context(const AnnotatedSentence& s) {
  s.validate();
  if (!s.dep_heads) throw DataError("sentence has no dependency annotation");
  const auto& heads = *s.dep_heads;
  const int target_pos = static_cast<int>(s.target_index) + 1;
  const int target_head = heads[s.target_index];

  ContextWindow w;
  w.spec = ContextSpec::dependency();
  w.target_lemma = target_lemma_of(s);
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    if (pos == target_pos) continue;
    if (pos == target_head || heads[i] == target_pos) w.words.push_back(s.tokens[i]);
  }
  return w;
}

ContextWindow extract_context(const AnnotatedSentence& s, const ContextSpec& spec,
                              const StopWords& stopwords) {
  if (spec.kind == ContextKind::bag_of_words)
    return extract_bow_window(filter_stopwords(s, stopwords), spec.radius);
  ContextWindow w = extract_dep_context(s);
  std::erase_if(w.words, [&](const std::string& word) { return stopwords.contains(word); });
  return w;
}

std::vector<AnnotatedSentence> read_conllu(std::istream& in) {
  std::vector<AnnotatedSentence> out;
  AnnotatedSentence current;
  current.lemmas.emplace();
  current.dep_heads.emplace();
  current.dep_labels.emplace();

  auto flush = [&] {
    if (!current.tokens.empty()) {
      out.push_back(std::move(current));
      current = AnnotatedSentence{};
      current.lemmas.emplace();
      current.dep_heads.emplace();
      current.dep_labels.emplace();
    }
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::trim(text).empty()) {
      flush();
      continue;
    }
    if (text.front() == '#') continue;

    auto fields = detail::split_on(text, '\t');
    if (fields.size() != 10) {
      throw DataError("line " + std::to_string(line_no) + ": expected 10 tab-separated columns, got " +
                      std::to_string(fields.size()));
    }
    // Multiword-token ranges ("1-2") and empty nodes ("1.1") carry no head.
    if (fields[0].find_first_of("-.") != std::string_view::npos) continue;

    int head = 0;
    auto h = fields[6];
    auto [ptr, ec] = std::from_chars(h.data(), h.data() + h.size(), head);
    if (ec != std::errc() || ptr != h.data() + h.size() || head < 0) {
      throw DataError("line " + std::to_string(line_no) + ": non-integer head '" +
                      std::string(h) + "'");
    }
    current.tokens.push_back(detail::to_lower(fields[1]));
    current.lemmas->push_back(fields[2] == "_" ? detail::to_lower(fields[1])
                                               : detail::to_lower(fields[2]));
    current.dep_heads->push_back(head);
    current.dep_labels->emplace_back(fields[7]);
  }
  flush();

  for (const auto& s : out) s.validate();
  return out;
}

std::vector<std::string> tokenize(std::string_view raw) {
  std::vector<std::string> out;
  for (auto piece : detail::split_ws(raw)) {
    while (!piece.empty() && std::ispunct(static_cast<unsigned char>(piece.front())))
      piece.remove_prefix(1);
    while (!piece.empty() && std::ispunct(static_cast<unsigned char>(piece.back())))
      piece.remove_suffix(1);
    if (!piece.empty()) out.push_back(detail::to_lower(piece));
  }
  return out;
}

std::optional<std::size_t> locate_target(const AnnotatedSentence& s, std::string_view lemma) {
  const std::string want = detail::to_lower(lemma);
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (detail::to_lower(s.tokens[i]) == want) return i;
    if (s.lemmas && detail::to_lower((*s.lemmas)[i]) == want) return i;
  }
  return std::nullopt;
}

}  // namespace sensecomp
