#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sensecomp/composer.hpp"
#include "sensecomp/embedding_store.hpp"

namespace sensecomp {

enum class PhraseCategory { AN, NN, VO };

inline constexpr std::array<PhraseCategory, 3> kAllCategories = {
    PhraseCategory::AN, PhraseCategory::NN, PhraseCategory::VO};

std::string_view to_string(PhraseCategory c);
// AN/NN/VO, or the long names adjectivenouns/compoundnouns/verbobjects.
std::optional<PhraseCategory> parse_category(std::string_view text);

struct Judgment {
  std::string participant;
  double score = 0.0;
};

struct PhrasePair {
  PhraseCategory category = PhraseCategory::AN;
  std::array<std::string, 2> phrase1;
  std::array<std::string, 2> phrase2;
  std::vector<Judgment> judgments;

  double mean_judgment() const;
};

// Rows "participant category w1 w2 w3 w4 score", tab-, comma- or
// whitespace-delimited, with an optional header. Rows sharing category and
// words are grouped into one pair, in order of first appearance.
std::vector<PhrasePair> load_pairs(std::istream& in);
std::vector<PhrasePair> load_pairs_file(const std::string& path);

enum class ScoreMode { single, max, min, mean };
std::optional<ScoreMode> parse_score_mode(std::string_view text);
std::string_view to_string(ScoreMode m);

// nullopt when a word has no representation. ScoreMode::single requires a
// single-sense table; on one, all modes coincide.
std::optional<double> score_pair(const EmbeddingTable& model, const PhrasePair& pair,
                                 ScoreMode mode = ScoreMode::single);
std::optional<double> score_pair(const SenseEmbeddingTable& model, const PhrasePair& pair,
                                 ScoreMode mode);

enum class RhoMode {
  per_judgment,  // model score repeated for every participant judgment
  per_pair,      // one observation per pair, against the mean judgment
};

struct CorrelationReport {
  std::map<PhraseCategory, std::optional<double>> rho;
  std::map<PhraseCategory, std::size_t> pairs_used;
  std::optional<double> average;
  std::size_t n_judgments = 0;
  std::size_t skipped_pairs = 0;
  std::vector<std::string> warnings;
};

// Builds the report from precomputed scores (nullopt = skipped pair).
CorrelationReport correlate(const std::vector<PhrasePair>& pairs,
                            const std::vector<std::optional<double>>& scores,
                            RhoMode rho_mode = RhoMode::per_judgment);

CorrelationReport evaluate_correlation(const EmbeddingTable& model,
                                       const std::vector<PhrasePair>& pairs,
                                       ScoreMode mode = ScoreMode::single,
                                       RhoMode rho_mode = RhoMode::per_judgment);
CorrelationReport evaluate_correlation(const SenseEmbeddingTable& model,
                                       const std::vector<PhrasePair>& pairs, ScoreMode mode,
                                       RhoMode rho_mode = RhoMode::per_judgment);

nlohmann::json correlation_to_json(const CorrelationReport& report, std::string_view model);
// "Model | AN | NN | VO | Average" rows, one per (name, report).
std::string format_correlation_table(
    const std::vector<std::pair<std::string, CorrelationReport>>& rows);

}  // namespace sensecomp
