#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sensecomp/inventory.hpp"
#include "sensecomp/random.hpp"

namespace sensecomp {

enum class Eligibility {
  more_than_n,   // lexemes with > n qualifying senses
  at_least_n,    // lexemes with >= n qualifying senses
};

struct TaskSpec {
  std::optional<Pos> pos_filter;
  int n_senses = 2;
  std::uint64_t seed = kDefaultSeed;
  double dev_fraction = 0.2;
  Eligibility eligibility = Eligibility::more_than_n;
  int repeat = 1;  // instances per eligible lexeme

  void validate() const;
};

struct WsdOption {
  AnnotatedSentence sentence;
  std::string sense_id;
};

struct WsdInstance {
  std::string id;
  std::string lemma;
  Pos pos = Pos::noun;
  std::string target_sense_id;
  AnnotatedSentence target;
  std::vector<WsdOption> options;
  std::size_t gold_index = 0;

  // Throws DataError naming the broken invariant.
  void validate() const;
};

// Senses with at least two examples.
std::vector<const Sense*> qualifying_senses(const Lexeme& lexeme);

std::vector<const Lexeme*> eligible_lexemes(const SenseInventory& inv, int n,
                                            Eligibility rule = Eligibility::more_than_n,
                                            std::optional<Pos> pos_filter = std::nullopt);

// One instance per eligible lexeme and repetition, ordered by (lemma, pos,
// repetition). Every random choice is drawn from a stream keyed by the seed,
// the lexeme, and the sampling site, so reordering the inventory changes nothing.
std::vector<WsdInstance> build_instances(const SenseInventory& inv, const TaskSpec& spec);

struct SplitCounts {
  std::size_t dev = 0;
  std::size_t test = 0;
};

struct TaskSplit {
  std::vector<WsdInstance> dev;
  std::vector<WsdInstance> test;
  std::map<Pos, SplitCounts> per_pos;
};

// Splits by lemma: round(dev_fraction * #lemmas) lemmas go to dev.
TaskSplit split_dev_test(const std::vector<WsdInstance>& instances, const TaskSpec& spec);

}  // namespace sensecomp
