#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sensecomp/context.hpp"
#include "sensecomp/embedding_store.hpp"

namespace sensecomp {

// A composed vector together with the senses that went into it. An empty
// `senses` list marks a single-sense ("mono") representation.
struct ComposedVariant {
  std::vector<SenseKey> senses;
  Vector vector;

  bool is_mono() const { return senses.empty(); }
};

// Elementwise sum. Throws UsageError on an empty list or mismatched lengths.
Vector compose(std::span<const Vector> vectors);
void add_into(Vector& acc, std::span<const double> v);

enum class OovPolicy { random, fail };

struct SingleContextualization {
  Vector vector;          // empty when target_oov
  bool target_oov = false;
  std::size_t oov_context = 0;
};

// Target vector plus every in-vocabulary context word. An OOV target throws
// DataError under OovPolicy::fail and is reported via target_oov otherwise.
SingleContextualization contextualize_single(const EmbeddingTable& table,
                                             std::string_view target,
                                             const ContextWindow& window,
                                             OovPolicy policy = OovPolicy::random);

// One variant per sense of the target: sense vector + sum of the sense
// centroids of the known context words. Throws DataError for an unknown lemma.
std::vector<ComposedVariant> contextualize_multi(const SenseEmbeddingTable& table,
                                                 std::string_view target_lemma,
                                                 const ContextWindow& window,
                                                 std::size_t* oov_context = nullptr);

struct ClosestPair {
  double similarity = 0.0;
  std::size_t a_index = 0;
  std::size_t b_index = 0;
};

// Maximum cosine over all variant pairs. The first maximal pair in
// (a_index, b_index) order wins, which is lexicographic sense-key order for
// variants produced by contextualize_multi.
ClosestPair closest_variant_similarity(std::span<const ComposedVariant> a,
                                       std::span<const ComposedVariant> b);

struct SenseConfigurationSet {
  std::string first;
  std::string second;
  std::vector<ComposedVariant> variants;
};

// All sums (sense of first) + (sense of second). Throws DataError if a word
// has no representation.
SenseConfigurationSet enumerate_phrase_configs(const EmbeddingTable& table,
                                               std::string_view first,
                                               std::string_view second);
SenseConfigurationSet enumerate_phrase_configs(const SenseEmbeddingTable& table,
                                               std::string_view first,
                                               std::string_view second);

enum class ConfigMode { max, min, mean };

double configuration_similarity(const SenseConfigurationSet& p1,
                                const SenseConfigurationSet& p2, ConfigMode mode);

}  // namespace sensecomp
