#include "sensecomp/wsd_eval.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "sensecomp/error.hpp"
#include "text_util.hpp"

namespace sensecomp {

RandomStream instance_stream(std::uint64_t seed, std::string_view instance_id) {
  return RandomStream::derive(seed, {"predict", instance_id});
}

Prediction choose_best(std::string instance_id, std::vector<double> scores, RandomStream& rng) {
  if (scores.empty()) throw UsageError("cannot choose among zero options");
  const double best = *std::max_element(scores.begin(), scores.end());
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (scores[i] >= best - kTieTolerance) tied.push_back(i);

  Prediction p;
  p.instance_id = std::move(instance_id);
  p.scores = std::move(scores);
  p.tie_broken = tied.size() > 1;
  p.chosen_index = p.tie_broken ? tied[rng.uniform_index(tied.size())] : tied.front();
  return p;
}

namespace {

Prediction unscoreable(const WsdInstance& inst, RandomStream& rng) {
  Prediction p;
  p.instance_id = inst.id;
  p.scores.assign(inst.options.size(), 0.0);
  p.unscoreable = true;
  p.chosen_index = rng.uniform_index(inst.options.size());
  return p;
}

ContextWindow window_of(const AnnotatedSentence& s, const WsdSettings& settings) {
  return extract_context(s, settings.context, settings.stopwords);
}

}  // namespace

Prediction predict_single(const EmbeddingTable& model, const WsdInstance& inst,
                          const WsdSettings& settings) {
  auto rng = instance_stream(settings.seed, inst.id);
  ContextWindow tw = window_of(inst.target, settings);
  tw.target_lemma = inst.lemma;
  auto target = contextualize_single(model, inst.target.target_token(), tw, settings.oov_policy);
  if (target.target_oov) {
    Prediction p = unscoreable(inst, rng);
    p.oov_context = target.oov_context;
    return p;
  }

  std::size_t oov = target.oov_context;
  std::vector<double> scores;
  scores.reserve(inst.options.size());
  for (const auto& opt : inst.options) {
    ContextWindow ow = window_of(opt.sentence, settings);
    ow.target_lemma = inst.lemma;
    auto composed =
        contextualize_single(model, opt.sentence.target_token(), ow, OovPolicy::random);
    oov += composed.oov_context;
    scores.push_back(composed.target_oov ? 0.0 : cosine(target.vector, composed.vector));
  }
  Prediction p = choose_best(inst.id, std::move(scores), rng);
  p.oov_context = oov;
  return p;
}

namespace {

std::vector<ComposedVariant> restrict_to(std::vector<ComposedVariant> variants,
                                         const std::string& sense_id, const WsdInstance& inst) {
  std::erase_if(variants,
                [&](const ComposedVariant& v) { return v.senses.front().sense_id != sense_id; });
  if (variants.empty()) {
    throw DataError("instance " + inst.id + ": label names unknown sense '" + sense_id +
                    "' of '" + inst.lemma + "'");
  }
  return variants;
}

Prediction predict_multi_impl(const SenseEmbeddingTable& model, const WsdInstance& inst,
                              const SenseLabels* labels, const WsdSettings& settings) {
  auto rng = instance_stream(settings.seed, inst.id);
  auto label_of = [&](const AnnotatedSentence& s) -> const std::string* {
    if (!labels) return nullptr;
    auto it = labels->find(sentence_key(s));
    return it == labels->end() ? nullptr : &it->second;
  };

  const std::string* target_label = label_of(inst.target);
  if (labels && !target_label)
    throw DataError("instance " + inst.id + ": target sentence has no sense label");

  if (!model.has_lemma(inst.lemma)) {
    if (target_label) {
      throw DataError("instance " + inst.id + ": label names unknown sense '" + *target_label +
                      "' of '" + inst.lemma + "'");
    }
    return unscoreable(inst, rng);
  }

  std::size_t oov = 0, n = 0;
  auto target = contextualize_multi(model, inst.lemma, window_of(inst.target, settings), &n);
  oov += n;
  if (target_label) target = restrict_to(std::move(target), *target_label, inst);

  std::vector<double> scores;
  scores.reserve(inst.options.size());
  for (const auto& opt : inst.options) {
    auto variants = contextualize_multi(model, inst.lemma, window_of(opt.sentence, settings), &n);
    oov += n;
    if (const std::string* label = label_of(opt.sentence))
      variants = restrict_to(std::move(variants), *label, inst);
    scores.push_back(closest_variant_similarity(target, variants).similarity);
  }
  Prediction p = choose_best(inst.id, std::move(scores), rng);
  p.oov_context = oov;
  return p;
}

}  // namespace

Prediction predict_multi(const SenseEmbeddingTable& model, const WsdInstance& inst,
                         const WsdSettings& settings) {
  return predict_multi_impl(model, inst, nullptr, settings);
}

Prediction predict_multi_oracle(const SenseEmbeddingTable& model, const WsdInstance& inst,
                                const SenseLabels& labels, const WsdSettings& settings) {
  return predict_multi_impl(model, inst, &labels, settings);
}

std::string sentence_key(const AnnotatedSentence& s) {
  std::string key;
  for (const auto& t : s.tokens) {
    if (!key.empty()) key += ' ';
    key += t;
  }
  return key;
}

SenseLabels load_sense_labels(std::istream& in) {
  SenseLabels labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::trim(text).empty()) continue;
    auto tab = text.rfind('\t');
    if (tab == std::string_view::npos)
      throw DataError("label line " + std::to_string(line_no) + ": expected tokens<TAB>sense_id");
    std::string key;
    for (const auto& t : detail::split_ws(text.substr(0, tab))) {
      if (!key.empty()) key += ' ';
      key += detail::to_lower(t);
    }
    auto sense = detail::trim(text.substr(tab + 1));
    if (key.empty() || sense.empty())
      throw DataError("label line " + std::to_string(line_no) + ": empty sentence or sense");
    labels.insert_or_assign(std::move(key), std::string(sense));
  }
  return labels;
}

SenseLabels load_sense_labels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open sense labels '" + path + "'");
  return load_sense_labels(in);
}

Prediction predict_overlap(const WsdInstance& inst, const WsdSettings& settings) {
  auto rng = instance_stream(settings.seed, inst.id);
  auto types = [&](const AnnotatedSentence& s) {
    auto words = window_of(s, settings).words;
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
  };
  const auto target = types(inst.target);
  std::vector<double> scores;
  for (const auto& opt : inst.options) {
    const auto other = types(opt.sentence);
    std::vector<std::string> common;
    std::set_intersection(target.begin(), target.end(), other.begin(), other.end(),
                          std::back_inserter(common));
    scores.push_back(static_cast<double>(common.size()));
  }
  return choose_best(inst.id, std::move(scores), rng);
}

Prediction predict_random(const WsdInstance& inst, std::uint64_t seed) {
  auto rng = RandomStream::derive(seed, {"random", inst.id});
  Prediction p;
  p.instance_id = inst.id;
  p.scores.assign(inst.options.size(), 0.0);
  p.chosen_index = rng.uniform_index(inst.options.size());
  return p;
}

std::vector<Prediction> predict_all(const std::vector<WsdInstance>& instances,
                                    const Predictor& predictor, unsigned jobs) {
  std::vector<Prediction> out(instances.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(instances.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) out[i] = predictor(instances[i]);
    return out;
  }

  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < instances.size(); i += jobs) out[i] = predictor(instances[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<bool> correctness(const std::vector<Prediction>& preds,
                              const std::vector<WsdInstance>& instances) {
  if (preds.size() != instances.size()) {
    throw DataError(std::to_string(preds.size()) + " predictions for " +
                    std::to_string(instances.size()) + " instances");
  }
  std::vector<bool> out(preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i].instance_id != instances[i].id)
      throw DataError("prediction " + preds[i].instance_id + " does not match instance " +
                      instances[i].id);
    out[i] = preds[i].chosen_index == instances[i].gold_index;
  }
  return out;
}

EvalReport evaluate(const std::vector<Prediction>& preds, const std::vector<WsdInstance>& instances,
                    const FrequencyTable* freq, const BandEdges& edges) {
  const auto correct = correctness(preds, instances);
  EvalReport r;
  r.n_instances = instances.size();
  std::vector<Accuracy> bands(freq ? edges.size() : 0);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const bool ok = correct[i];
    r.correct += ok;
    r.ties += preds[i].tie_broken;
    r.unscoreable += preds[i].unscoreable;
    r.oov_context += preds[i].oov_context;
    auto& pos = r.per_pos[instances[i].pos];
    pos.correct += ok;
    ++pos.total;
    if (freq) {
      auto& band = bands[assign_band(*freq, instances[i].lemma, edges).band];
      band.correct += ok;
      ++band.total;
    }
  }
  r.accuracy = r.n_instances == 0 ? 0.0 : static_cast<double>(r.correct) / r.n_instances;
  for (std::size_t b = 0; b < bands.size(); ++b) r.per_band.emplace_back(edges.label(b), bands[b]);
  return r;
}

nlohmann::json prediction_to_json(const Prediction& p, const WsdInstance& inst) {
  return {{"instance_id", p.instance_id},
          {"chosen_index", p.chosen_index},
          {"gold_index", inst.gold_index},
          {"correct", p.chosen_index == inst.gold_index},
          {"scores", p.scores},
          {"tie_broken", p.tie_broken},
          {"unscoreable", p.unscoreable},
          {"oov_context", p.oov_context}};
}

nlohmann::json report_to_json(const EvalReport& report) {
  auto acc = [](const Accuracy& a) {
    return nlohmann::json{{"accuracy", a.value()}, {"correct", a.correct}, {"total", a.total}};
  };
  nlohmann::json per_pos = nlohmann::json::object();
  for (const auto& [pos, a] : report.per_pos) per_pos[std::string(to_string(pos))] = acc(a);
  nlohmann::json per_band = nlohmann::json::array();
  for (const auto& [label, a] : report.per_band) {
    auto j = acc(a);
    j["band"] = label;
    per_band.push_back(std::move(j));
  }
  return {{"accuracy", report.accuracy},     {"n_instances", report.n_instances},
          {"correct", report.correct},       {"ties", report.ties},
          {"unscoreable", report.unscoreable}, {"oov_context", report.oov_context},
          {"per_pos", std::move(per_pos)},   {"per_band", std::move(per_band)}};
}

std::string format_report_table(const EvalReport& report, std::string_view title) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << title << '\n';
  auto row = [&](std::string_view name, const Accuracy& a) {
    os << "  " << std::left << std::setw(14) << name << std::right << std::setw(8) << a.value()
       << std::setw(8) << a.correct << " /" << std::setw(6) << a.total << '\n';
  };
  row("all", Accuracy{report.correct, report.n_instances});
  for (const auto& [pos, a] : report.per_pos)
    if (a.total > 0) row(to_string(pos), a);
  for (const auto& [label, a] : report.per_band) row(label, a);
  os << "  ties " << report.ties << ", unscoreable " << report.unscoreable
     << ", oov context words " << report.oov_context << '\n';
  return os.str();
}

}  // namespace sensecomp
