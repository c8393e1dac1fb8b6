#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sensecomp {

using Vector = std::vector<double>;

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};

template <typename V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;
using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

// Diagnostics collected while reading an embedding file.
struct LoadReport {
  std::size_t lines_read = 0;
  std::size_t duplicates = 0;
  std::size_t rejected_lines = 0;
  std::vector<std::string> warnings;
};

class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Returns nullptr if the token is unknown.
  const Vector* find(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token) != nullptr; }

  // Inserts or overwrites; returns true if the token was already present.
  bool insert(std::string token, Vector v);

  // Multiplies every stored vector by `factor`.
  EmbeddingTable scaled(double factor) const;

  const StringMap<Vector>& entries() const { return entries_; }

 private:
  std::size_t dimension_ = 0;
  StringMap<Vector> entries_;
};

// Identity of one sense: "lemma%sense_id" in rendered form.
struct SenseKey {
  std::string lemma;
  std::string sense_id;

  static constexpr char kDefaultSeparator = '%';

  // Lowercases the lemma. Throws UsageError if lemma or sense_id is empty
  // or the lemma contains the separator.
  static SenseKey make(std::string_view lemma, std::string_view sense_id,
                       char separator = kDefaultSeparator);
  // Splits at the first separator; nullopt if that is not a valid key.
  static std::optional<SenseKey> parse(std::string_view rendered,
                                       char separator = kDefaultSeparator);

  std::string render(char separator = kDefaultSeparator) const;

  auto operator<=>(const SenseKey&) const = default;
  bool operator==(const SenseKey&) const = default;
};

class SenseEmbeddingTable {
 public:
  SenseEmbeddingTable() = default;
  explicit SenseEmbeddingTable(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t lemma_count() const { return lemma_index_.size(); }

  const Vector* find(const SenseKey& key) const;
  bool has_lemma(std::string_view lemma) const;

  // Inserts or overwrites; returns true if the key was already present.
  bool insert(SenseKey key, Vector v);

  // Sense keys of `lemma`, sorted by sense_id. Empty if unknown.
  std::span<const SenseKey> keys_of(std::string_view lemma) const;

  SenseEmbeddingTable scaled(double factor) const;

  const std::map<SenseKey, Vector>& entries() const { return entries_; }
  const std::map<std::string, std::vector<SenseKey>, std::less<>>& lemma_index() const {
    return lemma_index_;
  }

 private:
  std::size_t dimension_ = 0;
  std::map<SenseKey, Vector> entries_;
  std::map<std::string, std::vector<SenseKey>, std::less<>> lemma_index_;
};

// Reads "token v1 ... vd" lines. With `expect_header`, the first line must be
// "count dim" and the body must agree with it. Duplicate tokens: last wins.
EmbeddingTable load_embeddings(std::istream& in, bool expect_header,
                               LoadReport* report = nullptr);
EmbeddingTable load_embeddings_file(const std::string& path, bool expect_header,
                                    LoadReport* report = nullptr);

// Like load_embeddings, but tokens are rendered sense keys. Lines whose token
// is not a valid key are skipped and counted in report->rejected_lines.
// A leading "count dim" header is recognised and skipped.
SenseEmbeddingTable load_sense_embeddings(std::istream& in,
                                          char separator = SenseKey::kDefaultSeparator,
                                          LoadReport* report = nullptr);
SenseEmbeddingTable load_sense_embeddings_file(const std::string& path,
                                               char separator = SenseKey::kDefaultSeparator,
                                               LoadReport* report = nullptr);

// u.v / (|u||v|). Zero-norm input yields 0 and sets *degenerate.
double cosine(std::span<const double> u, std::span<const double> v,
              bool* degenerate = nullptr);

std::vector<std::pair<SenseKey, const Vector*>> senses_of(const SenseEmbeddingTable& table,
                                                          std::string_view lemma);

// Mean of all sense vectors of `lemma`.
std::optional<Vector> sense_centroid(const SenseEmbeddingTable& table, std::string_view lemma);

}  // namespace sensecomp
