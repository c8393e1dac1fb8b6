#include "sensecomp/phrase_sim.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <tuple>

#include "sensecomp/error.hpp"
#include "sensecomp/spearman.hpp"
#include "text_util.hpp"

namespace sensecomp {

std::string_view to_string(PhraseCategory c) {
  switch (c) {
    case PhraseCategory::AN:
      return "AN";
    case PhraseCategory::NN:
      return "NN";
    case PhraseCategory::VO:
      return "VO";
  }
  return "AN";
}

std::optional<PhraseCategory> parse_category(std::string_view text) {
  const std::string t = detail::to_lower(text);
  if (t == "an" || t == "adjectivenouns") return PhraseCategory::AN;
  if (t == "nn" || t == "compoundnouns") return PhraseCategory::NN;
  if (t == "vo" || t == "verbobjects") return PhraseCategory::VO;
  return std::nullopt;
}

double PhrasePair::mean_judgment() const {
  double sum = 0.0;
  for (const auto& j : judgments) sum += j.score;
  return judgments.empty() ? 0.0 : sum / static_cast<double>(judgments.size());
}

namespace {

std::vector<std::string_view> split_row(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) return detail::split_on(line, '\t');
  if (line.find(',') != std::string_view::npos) return detail::split_on(line, ',');
  return detail::split_ws(line);
}

bool parse_score(std::string_view text, double& out) {
  text = detail::trim(text);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

}  // namespace

std::vector<PhrasePair> load_pairs(std::istream& in) {
  std::vector<PhrasePair> pairs;
  std::map<std::tuple<PhraseCategory, std::string, std::string, std::string, std::string>,
           std::size_t>
      index;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::trim(text).empty()) continue;
    auto fields = split_row(text);
    for (auto& f : fields) f = detail::trim(f);
    const std::string where = "row " + std::to_string(line_no);
    if (fields.size() != 7)
      throw DataError(where + ": expected 7 columns, got " + std::to_string(fields.size()));

    auto category = parse_category(fields[1]);
    double score = 0.0;
    const bool numeric = parse_score(fields[6], score);
    if (first && !category && !numeric) {
      first = false;
      continue;  // header
    }
    first = false;
    if (!category) throw DataError(where + ": unknown category '" + std::string(fields[1]) + "'");
    if (!numeric) throw DataError(where + ": non-numeric score '" + std::string(fields[6]) + "'");

    std::array<std::string, 4> w;
    for (std::size_t i = 0; i < 4; ++i) w[i] = detail::to_lower(fields[2 + i]);
    auto key = std::make_tuple(*category, w[0], w[1], w[2], w[3]);
    auto [it, inserted] = index.try_emplace(key, pairs.size());
    if (inserted) {
      PhrasePair p;
      p.category = *category;
      p.phrase1 = {w[0], w[1]};
      p.phrase2 = {w[2], w[3]};
      pairs.push_back(std::move(p));
    }
    pairs[it->second].judgments.push_back({std::string(fields[0]), score});
  }
  return pairs;
}

std::vector<PhrasePair> load_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open judgments file '" + path + "'");
  return load_pairs(in);
}

std::optional<ScoreMode> parse_score_mode(std::string_view text) {
  if (text == "single") return ScoreMode::single;
  if (text == "max") return ScoreMode::max;
  if (text == "min") return ScoreMode::min;
  if (text == "mean") return ScoreMode::mean;
  return std::nullopt;
}

std::string_view to_string(ScoreMode m) {
  switch (m) {
    case ScoreMode::single:
      return "single";
    case ScoreMode::max:
      return "max";
    case ScoreMode::min:
      return "min";
    case ScoreMode::mean:
      return "mean";
  }
  return "single";
}

namespace {

ConfigMode config_mode(ScoreMode m) {
  switch (m) {
    case ScoreMode::min:
      return ConfigMode::min;
    case ScoreMode::mean:
      return ConfigMode::mean;
    default:
      return ConfigMode::max;
  }
}

template <typename Table>
std::optional<double> score_with(const Table& model, const PhrasePair& pair, ScoreMode mode) {
  try {
    auto p1 = enumerate_phrase_configs(model, pair.phrase1[0], pair.phrase1[1]);
    auto p2 = enumerate_phrase_configs(model, pair.phrase2[0], pair.phrase2[1]);
    return configuration_similarity(p1, p2, config_mode(mode));
  } catch (const DataError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<double> score_pair(const EmbeddingTable& model, const PhrasePair& pair,
                                 ScoreMode mode) {
  return score_with(model, pair, mode);
}

std::optional<double> score_pair(const SenseEmbeddingTable& model, const PhrasePair& pair,
                                 ScoreMode mode) {
  if (mode == ScoreMode::single)
    throw UsageError("mode 'single' needs a single-sense embedding table");
  return score_with(model, pair, mode);
}

CorrelationReport correlate(const std::vector<PhrasePair>& pairs,
                            const std::vector<std::optional<double>>& scores, RhoMode rho_mode) {
  if (pairs.size() != scores.size()) throw UsageError("one score per phrase pair is required");
  CorrelationReport report;
  std::map<PhraseCategory, std::vector<double>> model_obs, human_obs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pair = pairs[i];
    if (!scores[i]) {
      ++report.skipped_pairs;
      continue;
    }
    ++report.pairs_used[pair.category];
    auto& xs = model_obs[pair.category];
    auto& ys = human_obs[pair.category];
    if (rho_mode == RhoMode::per_pair) {
      xs.push_back(*scores[i]);
      ys.push_back(pair.mean_judgment());
      report.n_judgments += pair.judgments.size();
    } else {
      for (const auto& j : pair.judgments) {
        xs.push_back(*scores[i]);
        ys.push_back(j.score);
        ++report.n_judgments;
      }
    }
  }

  double sum = 0.0;
  std::size_t present = 0;
  for (PhraseCategory c : kAllCategories) {
    const std::size_t used = report.pairs_used[c];
    auto& rho = report.rho[c];
    const std::string name(to_string(c));
    if (used < 2) {
      report.warnings.push_back("category " + name + " has " + std::to_string(used) +
                                " usable pairs; correlation omitted");
      continue;
    }
    rho = spearman(model_obs[c], human_obs[c]);
    if (!rho) {
      report.warnings.push_back("category " + name + " has constant scores; correlation omitted");
      continue;
    }
    sum += *rho;
    ++present;
  }
  if (present > 0) report.average = sum / static_cast<double>(present);
  return report;
}

CorrelationReport evaluate_correlation(const EmbeddingTable& model,
                                       const std::vector<PhrasePair>& pairs, ScoreMode mode,
                                       RhoMode rho_mode) {
  std::vector<std::optional<double>> scores;
  scores.reserve(pairs.size());
  for (const auto& p : pairs) scores.push_back(score_pair(model, p, mode));
  return correlate(pairs, scores, rho_mode);
}

CorrelationReport evaluate_correlation(const SenseEmbeddingTable& model,
                                       const std::vector<PhrasePair>& pairs, ScoreMode mode,
                                       RhoMode rho_mode) {
  std::vector<std::optional<double>> scores;
  scores.reserve(pairs.size());
  for (const auto& p : pairs) scores.push_back(score_pair(model, p, mode));
  return correlate(pairs, scores, rho_mode);
}

nlohmann::json correlation_to_json(const CorrelationReport& report, std::string_view model) {
  nlohmann::json rho = nlohmann::json::object();
  for (const auto& [c, r] : report.rho) {
    rho[std::string(to_string(c))] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
  }
  nlohmann::json used = nlohmann::json::object();
  for (const auto& [c, n] : report.pairs_used) used[std::string(to_string(c))] = n;
  return {{"model", model},
          {"rho", std::move(rho)},
          {"average", report.average ? nlohmann::json(*report.average) : nlohmann::json(nullptr)},
          {"pairs_used", std::move(used)},
          {"n_judgments", report.n_judgments},
          {"skipped_pairs", report.skipped_pairs},
          {"warnings", report.warnings}};
}

std::string format_correlation_table(
    const std::vector<std::pair<std::string, CorrelationReport>>& rows) {
  std::size_t width = 5;
  for (const auto& [name, r] : rows) width = std::max(width, name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "Model";
  for (PhraseCategory c : kAllCategories) os << " | " << std::setw(5) << to_string(c);
  os << " | Average\n";
  os << std::string(width, '-') << std::string(3 * 8 + 10, '-') << '\n';
  auto cell = [&](const std::optional<double>& v) {
    std::ostringstream c;
    if (v)
      c << std::fixed << std::setprecision(2) << *v;
    else
      c << "-";
    return c.str();
  };
  for (const auto& [name, r] : rows) {
    os << std::left << std::setw(static_cast<int>(width)) << name;
    for (PhraseCategory c : kAllCategories) {
      auto it = r.rho.find(c);
      os << " | " << std::setw(5) << cell(it == r.rho.end() ? std::nullopt : it->second);
    }
    os << " | " << cell(r.average) << '\n';
  }
  return os.str();
}

}  // namespace sensecomp
