#pragma once

// Synthetic inventories and embedding tables for property and acceptance tests.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sensecomp/embedding_store.hpp"
#include "sensecomp/inventory.hpp"

namespace synth {

std::string lemma_name(std::size_t lexeme);
std::string sense_name(std::size_t sense);
// Context word `k` of sense `s` of lexeme `l`; vocabularies never overlap.
std::string context_word(std::size_t lexeme, std::size_t sense, std::size_t k);

struct InventoryShape {
  std::size_t lexemes = 100;
  std::size_t senses = 6;
  std::size_t examples = 3;
  std::size_t vocabulary = 6;  // context words per sense
  std::size_t radius = 2;      // context words on each side of the target
  std::uint64_t seed = 1;
};

// Every example is `radius` sense-specific words, the lemma, `radius` more.
sensecomp::SenseInventory make_inventory(const InventoryShape& shape);

// Tables in which each sense is a distinct basis vector and every context
// word points along the basis vector of its sense. The word table stores the
// conflated lemma vector (sum of its senses). Gaussian noise of `sigma` is
// added to every component when sigma > 0.
struct SeparableTables {
  sensecomp::EmbeddingTable words;
  sensecomp::SenseEmbeddingTable senses;
};
SeparableTables make_separable_tables(const InventoryShape& shape, std::size_t dimension,
                                      double sigma, std::uint64_t noise_seed);

// A random word table over the inventory's vocabulary (dropping roughly
// `oov_rate` of the context words) and its one-sense-per-lemma twin.
SeparableTables make_twin_tables(const InventoryShape& shape, std::size_t dimension,
                                 double oov_rate, std::uint64_t seed);

// `words` lemmas with 2..5 random senses each.
sensecomp::SenseEmbeddingTable make_random_sense_table(const std::vector<std::string>& words,
                                                       std::size_t dimension,
                                                       std::size_t min_senses,
                                                       std::size_t max_senses,
                                                       std::uint64_t seed);

}  // namespace synth
