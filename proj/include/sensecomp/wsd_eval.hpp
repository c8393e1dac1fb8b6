#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sensecomp/composer.hpp"
#include "sensecomp/context.hpp"
#include "sensecomp/embedding_store.hpp"
#include "sensecomp/frequency.hpp"
#include "sensecomp/random.hpp"
#include "sensecomp/task_builder.hpp"

namespace sensecomp {

// Scores within this absolute distance of the best score are tied.
inline constexpr double kTieTolerance = 1e-9;

struct Prediction {
  std::string instance_id;
  std::size_t chosen_index = 0;
  std::vector<double> scores;
  bool tie_broken = false;
  bool unscoreable = false;
  std::size_t oov_context = 0;
};

struct WsdSettings {
  ContextSpec context = ContextSpec::bow(2);
  StopWords stopwords;
  OovPolicy oov_policy = OovPolicy::random;
  std::uint64_t seed = kDefaultSeed;
};

// Picks the highest score; ties (within kTieTolerance) are broken uniformly
// with `rng`.
Prediction choose_best(std::string instance_id, std::vector<double> scores, RandomStream& rng);

// Per-instance stream for tie-breaking and unscoreable fallbacks.
RandomStream instance_stream(std::uint64_t seed, std::string_view instance_id);

Prediction predict_single(const EmbeddingTable& model, const WsdInstance& inst,
                          const WsdSettings& settings);

Prediction predict_multi(const SenseEmbeddingTable& model, const WsdInstance& inst,
                         const WsdSettings& settings);

// Sense labels keyed by the sentence's tokens joined with single spaces.
using SenseLabels = StringMap<std::string>;
std::string sentence_key(const AnnotatedSentence& s);
// "tokens<TAB>sense_id" lines.
SenseLabels load_sense_labels(std::istream& in);
SenseLabels load_sense_labels_file(const std::string& path);

// predict_multi with the target (and any labelled option) restricted to its
// labelled sense. Throws DataError if the target sentence is unlabelled or a
// label names a sense the model does not have.
Prediction predict_multi_oracle(const SenseEmbeddingTable& model, const WsdInstance& inst,
                                const SenseLabels& labels, const WsdSettings& settings);

// Number of word types shared between the target window and each option window.
Prediction predict_overlap(const WsdInstance& inst, const WsdSettings& settings);

Prediction predict_random(const WsdInstance& inst, std::uint64_t seed);

using Predictor = std::function<Prediction(const WsdInstance&)>;

// Runs `predictor` over every instance using up to `jobs` threads. The
// result is in instance order and independent of `jobs`.
std::vector<Prediction> predict_all(const std::vector<WsdInstance>& instances,
                                    const Predictor& predictor, unsigned jobs = 1);

struct Accuracy {
  std::size_t correct = 0;
  std::size_t total = 0;
  double value() const { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

struct EvalReport {
  double accuracy = 0.0;
  std::size_t n_instances = 0;
  std::size_t correct = 0;
  std::size_t ties = 0;
  std::size_t unscoreable = 0;
  std::size_t oov_context = 0;
  std::map<Pos, Accuracy> per_pos;
  // band label -> accuracy, in band order
  std::vector<std::pair<std::string, Accuracy>> per_band;
};

EvalReport evaluate(const std::vector<Prediction>& preds, const std::vector<WsdInstance>& instances,
                    const FrequencyTable* freq = nullptr,
                    const BandEdges& edges = BandEdges::standard());

// Per-instance correctness, aligned with `instances`.
std::vector<bool> correctness(const std::vector<Prediction>& preds,
                              const std::vector<WsdInstance>& instances);

nlohmann::json prediction_to_json(const Prediction& p, const WsdInstance& inst);
nlohmann::json report_to_json(const EvalReport& report);
std::string format_report_table(const EvalReport& report, std::string_view title);

}  // namespace sensecomp
