#include "sensecomp/composer.hpp"

#include <algorithm>

#include "sensecomp/error.hpp"

namespace sensecomp {

void add_into(Vector& acc, std::span<const double> v) {
  if (acc.size() != v.size()) {
    throw UsageError("cannot add vectors of lengths " + std::to_string(acc.size()) + " and " +
                     std::to_string(v.size()));
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

Vector compose(std::span<const Vector> vectors) {
  if (vectors.empty()) throw UsageError("compose needs at least one vector");
  Vector sum = vectors.front();
  for (const Vector& v : vectors.subspan(1)) add_into(sum, v);
  return sum;
}

SingleContextualization contextualize_single(const EmbeddingTable& table,
                                             std::string_view target,
                                             const ContextWindow& window, OovPolicy policy) {
  SingleContextualization out;
  const Vector* t = table.find(target);
  if (!t && !window.target_lemma.empty()) t = table.find(window.target_lemma);
  if (!t) {
    if (policy == OovPolicy::fail)
      throw DataError("target '" + std::string(target) + "' is out of vocabulary");
    out.target_oov = true;
  } else {
    out.vector = *t;
  }
  for (const std::string& word : window.words) {
    const Vector* v = table.find(word);
    if (!v) {
      ++out.oov_context;
      continue;
    }
    if (!out.target_oov) add_into(out.vector, *v);
  }
  return out;
}

std::vector<ComposedVariant> contextualize_multi(const SenseEmbeddingTable& table,
                                                 std::string_view target_lemma,
                                                 const ContextWindow& window,
                                                 std::size_t* oov_context) {
  auto senses = senses_of(table, target_lemma);
  if (senses.empty())
    throw DataError("lemma '" + std::string(target_lemma) + "' has no sense vectors");

  std::vector<Vector> centroids;
  std::size_t oov = 0;
  for (const std::string& word : window.words) {
    if (auto centroid = sense_centroid(table, word))
      centroids.push_back(std::move(*centroid));
    else
      ++oov;
  }
  if (oov_context) *oov_context = oov;

  std::vector<ComposedVariant> variants;
  variants.reserve(senses.size());
  for (auto& [key, vec] : senses) {
    // Same summation order as contextualize_single: target, then each word.
    ComposedVariant v{{key}, *vec};
    for (const Vector& c : centroids) add_into(v.vector, c);
    variants.push_back(std::move(v));
  }
  return variants;
}

ClosestPair closest_variant_similarity(std::span<const ComposedVariant> a,
                                       std::span<const ComposedVariant> b) {
  if (a.empty() || b.empty()) throw UsageError("closest-sense scoring needs nonempty variant lists");
  ClosestPair best{-2.0, 0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double sim = cosine(a[i].vector, b[j].vector);
      if (sim > best.similarity) best = {sim, i, j};
    }
  }
  return best;
}

SenseConfigurationSet enumerate_phrase_configs(const EmbeddingTable& table,
                                               std::string_view first,
                                               std::string_view second) {
  const Vector* u = table.find(first);
  const Vector* v = table.find(second);
  if (!u) throw DataError("'" + std::string(first) + "' is out of vocabulary");
  if (!v) throw DataError("'" + std::string(second) + "' is out of vocabulary");
  SenseConfigurationSet out{std::string(first), std::string(second), {}};
  Vector sum = *u;
  add_into(sum, *v);
  out.variants.push_back({{}, std::move(sum)});
  return out;
}

SenseConfigurationSet enumerate_phrase_configs(const SenseEmbeddingTable& table,
                                               std::string_view first,
                                               std::string_view second) {
  auto s1 = senses_of(table, first);
  auto s2 = senses_of(table, second);
  if (s1.empty()) throw DataError("'" + std::string(first) + "' has no sense vectors");
  if (s2.empty()) throw DataError("'" + std::string(second) + "' has no sense vectors");
  SenseConfigurationSet out{std::string(first), std::string(second), {}};
  out.variants.reserve(s1.size() * s2.size());
  for (const auto& [k1, v1] : s1) {
    for (const auto& [k2, v2] : s2) {
      Vector sum = *v1;
      add_into(sum, *v2);
      out.variants.push_back({{k1, k2}, std::move(sum)});
    }
  }
  return out;
}

double configuration_similarity(const SenseConfigurationSet& p1,
                                const SenseConfigurationSet& p2, ConfigMode mode) {
  if (p1.variants.empty() || p2.variants.empty())
    throw UsageError("sense configuration sets must be nonempty");
  double lo = 2.0, hi = -2.0, sum = 0.0;
  for (const auto& a : p1.variants) {
    for (const auto& b : p2.variants) {
      const double sim = cosine(a.vector, b.vector);
      lo = std::min(lo, sim);
      hi = std::max(hi, sim);
      sum += sim;
    }
  }
  switch (mode) {
    case ConfigMode::max:
      return hi;
    case ConfigMode::min:
      return lo;
    case ConfigMode::mean: {
      const double n = static_cast<double>(p1.variants.size() * p2.variants.size());
      // Rounding in the running sum can push the mean a few ulps past the extremes.
      return std::clamp(sum / n, lo, hi);
    }
  }
  return hi;
}

}  // namespace sensecomp
