// sensecomp: build word-sense discrimination tasks and evaluate additive
// composition of single- and multi-sense embeddings.
//
//   sensecomp task build   --inventory inv.json --out-dir tasks/
//   sensecomp eval wsd     --tasks tasks/n2.test.jsonl --strategy single --embeddings vec.txt
//   sensecomp eval phrase  --pairs judgments.txt --sense-embeddings senses.txt --mode max
//   sensecomp significance --a preds_a.jsonl --b preds_b.jsonl
//   sensecomp freq bands   --freq counts.tsv --tasks tasks/n2.test.jsonl
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sensecomp/error.hpp"
#include "sensecomp/frequency.hpp"
#include "sensecomp/inventory.hpp"
#include "sensecomp/phrase_sim.hpp"
#include "sensecomp/significance.hpp"
#include "sensecomp/task_builder.hpp"
#include "sensecomp/task_io.hpp"
#include "sensecomp/wsd_eval.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sensecomp;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct TaskBuildOptions {
  std::string inventory;
  std::string out_dir;
  std::vector<int> n_senses{2, 3, 4, 5};
  std::uint64_t seed = kDefaultSeed;
  double dev_fraction = 0.2;
  std::string pos;
  bool at_least_n = false;
  int repeat = 1;
};

struct EmbeddingOptions {
  std::string embeddings;
  bool header = false;
  std::string sense_embeddings;
  char separator = SenseKey::kDefaultSeparator;
};

struct EvalWsdOptions {
  std::string tasks;
  std::string strategy;
  EmbeddingOptions emb;
  std::string context = "2";
  std::string stopwords;
  bool no_stopwords = false;
  std::string oov_policy = "random";
  std::string labels;
  std::string freq;
  std::string band_edges = "1,1000,10000,50000,100000";
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string predictions_out;
  std::string report_out;
  std::string format = "table";
};

struct EvalPhraseOptions {
  std::string pairs;
  EmbeddingOptions emb;
  std::vector<std::string> modes{"single"};
  std::string rho_mode = "per-judgment";
  std::string name;
  std::string report_out;
  std::string format = "table";
};

struct SignificanceOptions {
  std::string a;
  std::string b;
  std::size_t rounds = kDefaultPermutationRounds;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "table";
};

struct FreqBandsOptions {
  std::string freq;
  std::vector<std::string> tasks;
  std::string edges = "1,1000,10000,50000,100000";
  std::string sample_out;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "table";
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  return out;
}

void print_warnings(const std::vector<std::string>& warnings, std::string_view source) {
  constexpr std::size_t kShown = 10;
  for (std::size_t i = 0; i < std::min(kShown, warnings.size()); ++i)
    std::cerr << "warning: " << source << ": " << warnings[i] << '\n';
  if (warnings.size() > kShown)
    std::cerr << "warning: " << source << ": " << warnings.size() - kShown
              << " more warnings suppressed\n";
}

// ---------------------------------------------------------------- task build

int run_task_build(const TaskBuildOptions& opt) {
  std::optional<Pos> pos;
  if (!opt.pos.empty()) {
    pos = parse_pos(opt.pos);
    if (!pos) throw UsageError("unknown part of speech '" + opt.pos + "'");
  }

  IngestReport ingest;
  const SenseInventory inv = ingest_inventory_file(opt.inventory, &ingest);
  print_warnings(ingest.messages, opt.inventory);

  fs::create_directories(opt.out_dir);

  std::vector<int> ns = opt.n_senses;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::map<int, TaskSplit> splits;
  for (int n : ns) {
    TaskSpec spec;
    spec.pos_filter = pos;
    spec.n_senses = n;
    spec.seed = opt.seed;
    spec.dev_fraction = opt.dev_fraction;
    spec.eligibility = opt.at_least_n ? Eligibility::at_least_n : Eligibility::more_than_n;
    spec.repeat = opt.repeat;
    spec.validate();

    const auto instances = build_instances(inv, spec);
    TaskSplit split = split_dev_test(instances, spec);
    const fs::path base = fs::path(opt.out_dir) / ("n" + std::to_string(n));
    write_instances_file(base.string() + ".dev.jsonl", split.dev);
    write_instances_file(base.string() + ".test.jsonl", split.test);
    splits.emplace(n, std::move(split));
  }

  // Instances per part of speech and number of senses, as dev/test.
  std::ostringstream table;
  table << std::left << std::setw(10) << "dev/test";
  for (int n : ns) table << " | " << std::setw(11) << (std::to_string(n) + " senses");
  table << '\n';
  auto cell = [](std::size_t dev, std::size_t test) {
    return std::to_string(dev) + "/" + std::to_string(test);
  };
  for (Pos p : kAllPos) {
    if (pos && p != *pos) continue;
    table << std::left << std::setw(10) << to_string(p);
    for (int n : ns) {
      const auto& c = splits.at(n).per_pos.at(p);
      table << " | " << std::setw(11) << cell(c.dev, c.test);
    }
    table << '\n';
  }
  table << std::left << std::setw(10) << "total";
  for (int n : ns) {
    const auto& s = splits.at(n);
    table << " | " << std::setw(11) << cell(s.dev.size(), s.test.size());
  }
  table << '\n';

  open_output((fs::path(opt.out_dir) / "stats.txt").string()) << table.str();
  std::cout << table.str();
  std::cerr << "inventory: " << inv.lexemes.size() << " lexemes, " << ingest.dropped_examples
            << " examples dropped, " << ingest.duplicate_examples << " repeated examples\n";
  return 0;
}

// ------------------------------------------------------------------ eval wsd

std::optional<EmbeddingTable> load_word_table(const EmbeddingOptions& emb) {
  if (emb.embeddings.empty()) return std::nullopt;
  LoadReport rep;
  auto table = load_embeddings_file(emb.embeddings, emb.header, &rep);
  print_warnings(rep.warnings, emb.embeddings);
  return table;
}

std::optional<SenseEmbeddingTable> load_sense_table(const EmbeddingOptions& emb) {
  if (emb.sense_embeddings.empty()) return std::nullopt;
  LoadReport rep;
  auto table = load_sense_embeddings_file(emb.sense_embeddings, emb.separator, &rep);
  if (rep.rejected_lines > 0)
    std::cerr << "warning: " << emb.sense_embeddings << ": " << rep.rejected_lines
              << " lines without a sense key skipped\n";
  print_warnings(rep.warnings, emb.sense_embeddings);
  return table;
}

int run_eval_wsd(const EvalWsdOptions& opt) {
  WsdSettings settings;
  settings.context = ContextSpec::parse(opt.context);
  settings.seed = opt.seed;
  settings.oov_policy = opt.oov_policy == "fail" ? OovPolicy::fail : OovPolicy::random;
  if (!opt.no_stopwords)
    settings.stopwords = opt.stopwords.empty() ? default_stopwords() : load_stopwords_file(opt.stopwords);

  const bool needs_words = opt.strategy == "single";
  const bool needs_senses = opt.strategy == "multi" || opt.strategy == "multi-oracle";
  if (needs_words && opt.emb.embeddings.empty())
    throw UsageError("strategy 'single' needs --embeddings (a word embedding table)");
  if (needs_senses && opt.emb.sense_embeddings.empty())
    throw UsageError("strategy '" + opt.strategy + "' needs --sense-embeddings (a sense table)");
  if (opt.strategy == "multi-oracle" && opt.labels.empty())
    throw UsageError("strategy 'multi-oracle' needs --labels");

  const auto instances = read_instances_file(opt.tasks);
  std::optional<EmbeddingTable> words;
  std::optional<SenseEmbeddingTable> senses;
  if (needs_words) words = load_word_table(opt.emb);
  if (needs_senses) senses = load_sense_table(opt.emb);
  SenseLabels labels;
  if (!opt.labels.empty()) labels = load_sense_labels_file(opt.labels);

  Predictor predictor;
  if (opt.strategy == "single") {
    predictor = [&](const WsdInstance& i) { return predict_single(*words, i, settings); };
  } else if (opt.strategy == "multi") {
    predictor = [&](const WsdInstance& i) { return predict_multi(*senses, i, settings); };
  } else if (opt.strategy == "multi-oracle") {
    predictor = [&](const WsdInstance& i) {
      return predict_multi_oracle(*senses, i, labels, settings);
    };
  } else if (opt.strategy == "overlap") {
    predictor = [&](const WsdInstance& i) { return predict_overlap(i, settings); };
  } else {
    predictor = [&](const WsdInstance& i) { return predict_random(i, settings.seed); };
  }

  const auto preds = predict_all(instances, predictor, opt.jobs);

  std::optional<FrequencyTable> freq;
  if (!opt.freq.empty()) freq = load_frequency_table_file(opt.freq);
  const BandEdges edges = BandEdges::parse(opt.band_edges);
  const EvalReport report = evaluate(preds, instances, freq ? &*freq : nullptr, edges);

  json report_json = report_to_json(report);
  report_json["strategy"] = opt.strategy;
  report_json["context"] = settings.context.name();
  report_json["seed"] = opt.seed;
  report_json["tasks"] = fs::path(opt.tasks).filename().string();

  if (!opt.predictions_out.empty()) {
    auto out = open_output(opt.predictions_out);
    for (std::size_t i = 0; i < preds.size(); ++i)
      out << prediction_to_json(preds[i], instances[i]).dump() << '\n';
  }
  if (!opt.report_out.empty()) open_output(opt.report_out) << report_json.dump() << '\n';

  if (opt.format == "records") {
    std::cout << report_json.dump() << '\n';
  } else {
    std::cout << format_report_table(
        report, opt.strategy + " (" + settings.context.name() + ", seed " +
                    std::to_string(opt.seed) + ")");
  }
  return 0;
}

// --------------------------------------------------------------- eval phrase

int run_eval_phrase(const EvalPhraseOptions& opt) {
  const bool have_words = !opt.emb.embeddings.empty();
  const bool have_senses = !opt.emb.sense_embeddings.empty();
  if (have_words == have_senses)
    throw UsageError("give exactly one of --embeddings or --sense-embeddings");

  std::vector<ScoreMode> modes;
  for (const auto& m : opt.modes) modes.push_back(*parse_score_mode(m));
  if (have_senses && std::find(modes.begin(), modes.end(), ScoreMode::single) != modes.end())
    throw UsageError("mode 'single' needs --embeddings; use max, min or mean with sense tables");

  const RhoMode rho_mode = opt.rho_mode == "per-pair" ? RhoMode::per_pair : RhoMode::per_judgment;
  const auto pairs = load_pairs_file(opt.pairs);
  const auto words = load_word_table(opt.emb);
  const auto senses = load_sense_table(opt.emb);

  std::string name = opt.name;
  if (name.empty()) {
    name = fs::path(have_words ? opt.emb.embeddings : opt.emb.sense_embeddings).stem().string();
  }

  std::vector<std::pair<std::string, CorrelationReport>> rows;
  for (ScoreMode mode : modes) {
    CorrelationReport r = have_words ? evaluate_correlation(*words, pairs, mode, rho_mode)
                                     : evaluate_correlation(*senses, pairs, mode, rho_mode);
    print_warnings(r.warnings, opt.pairs);
    if (r.skipped_pairs > 0)
      std::cerr << "warning: " << r.skipped_pairs << " pairs skipped (out of vocabulary)\n";
    const std::string row_name =
        mode == ScoreMode::single ? name : name + ":" + std::string(to_string(mode));
    rows.emplace_back(row_name, std::move(r));
  }

  std::string records;
  for (const auto& [row_name, r] : rows) {
    json j = correlation_to_json(r, row_name);
    j["rho_mode"] = opt.rho_mode;
    records += j.dump() + '\n';
  }
  if (!opt.report_out.empty()) open_output(opt.report_out) << records;
  if (opt.format == "records")
    std::cout << records;
  else
    std::cout << format_correlation_table(rows);
  return 0;
}

// -------------------------------------------------------------- significance

struct PredictionFile {
  std::vector<std::string> ids;
  std::vector<bool> correct;
};

PredictionFile read_prediction_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open predictions '" + path + "'");
  PredictionFile out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      out.ids.push_back(j.at("instance_id").get<std::string>());
      out.correct.push_back(j.at("correct").get<bool>());
    } catch (const json::exception& e) {
      throw DataError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (out.ids.empty()) throw DataError("no predictions in '" + path + "'");
  return out;
}

int run_significance(const SignificanceOptions& opt) {
  const auto a = read_prediction_file(opt.a);
  auto b = read_prediction_file(opt.b);

  // Align B to A's instance order.
  std::map<std::string, std::size_t> b_index;
  for (std::size_t i = 0; i < b.ids.size(); ++i)
    if (!b_index.emplace(b.ids[i], i).second)
      throw DataError("instance '" + b.ids[i] + "' appears twice in " + opt.b);
  if (a.ids.size() != b.ids.size())
    throw DataError("prediction files cover different instance sets (" +
                    std::to_string(a.ids.size()) + " vs " + std::to_string(b.ids.size()) + ")");
  std::vector<bool> b_aligned(a.ids.size());
  for (std::size_t i = 0; i < a.ids.size(); ++i) {
    auto it = b_index.find(a.ids[i]);
    if (it == b_index.end())
      throw DataError("instance '" + a.ids[i] + "' is missing from " + opt.b);
    b_aligned[i] = b.correct[it->second];
  }

  const auto res = permutation_test(a.correct, b_aligned, opt.rounds, opt.seed);
  if (opt.format == "records") {
    std::cout << json{{"p_value", res.p_value},         {"observed_diff", res.observed_diff},
                      {"accuracy_a", res.mean_a},       {"accuracy_b", res.mean_b},
                      {"exceed_count", res.exceed_count}, {"rounds", res.rounds},
                      {"seed", res.seed},               {"sided", "two"},
                      {"n", a.ids.size()}}
                     .dump()
              << '\n';
  } else {
    std::cout << std::fixed << std::setprecision(4) << "accuracy A     " << res.mean_a << '\n'
              << "accuracy B     " << res.mean_b << '\n'
              << "|difference|   " << res.observed_diff << '\n'
              << "p (two-sided)  " << std::setprecision(6) << res.p_value << '\n'
              << "rounds         " << res.rounds << '\n'
              << "seed           " << res.seed << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- freq bands

int run_freq_bands(const FreqBandsOptions& opt) {
  const auto freq = load_frequency_table_file(opt.freq);
  const BandEdges edges = BandEdges::parse(opt.edges);

  std::vector<WsdInstance> instances;
  for (const auto& path : opt.tasks) {
    auto more = read_instances_file(path);
    instances.insert(instances.end(), std::make_move_iterator(more.begin()),
                     std::make_move_iterator(more.end()));
  }

  std::vector<std::string> lemmas;
  std::vector<std::size_t> per_band_instances(edges.size(), 0);
  std::size_t flagged = 0;
  for (const auto& inst : instances) {
    lemmas.push_back(inst.lemma);
    const auto band = assign_band(freq, inst.lemma, edges);
    ++per_band_instances[band.band];
    flagged += band.flagged;
  }
  const auto per_band_lemmas = band_histogram(freq, lemmas, edges);

  if (!opt.sample_out.empty()) {
    const auto sample = sample_equal_bands(instances, freq, edges, opt.seed);
    write_instances_file(opt.sample_out, sample);
    std::cerr << "sampled " << sample.size() << " instances (" << sample.size() / edges.size()
              << " per band)\n";
  }

  if (opt.format == "records") {
    for (std::size_t b = 0; b < edges.size(); ++b) {
      std::cout << json{{"band", edges.label(b)},
                        {"lemmas", per_band_lemmas[b]},
                        {"instances", per_band_instances[b]}}
                       .dump()
                << '\n';
    }
  } else {
    std::cout << std::left << std::setw(14) << "band" << std::right << std::setw(8) << "lemmas"
              << std::setw(11) << "instances" << '\n';
    for (std::size_t b = 0; b < edges.size(); ++b) {
      std::cout << std::left << std::setw(14) << edges.label(b) << std::right << std::setw(8)
                << per_band_lemmas[b] << std::setw(11) << per_band_instances[b] << '\n';
    }
  }
  if (flagged > 0)
    std::cerr << "warning: " << flagged << " instances have lemmas missing from the frequency table\n";
  return 0;
}

void add_embedding_flags(CLI::App* cmd, EmbeddingOptions& emb) {
  cmd->add_option("--embeddings", emb.embeddings, "Word embedding text file (token v1 ... vd)")
      ->check(CLI::ExistingFile);
  cmd->add_flag("--header", emb.header, "Word embedding file starts with a 'count dim' line");
  cmd->add_option("--sense-embeddings", emb.sense_embeddings,
                  "Sense embedding text file (lemma%sense v1 ... vd)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--separator", emb.separator, "Separator between lemma and sense id")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-sense discrimination and phrase-similarity evaluation for embeddings"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  // task build
  TaskBuildOptions tb;
  auto* task = app.add_subcommand("task", "Task construction");
  task->require_subcommand(1);
  auto* build = task->add_subcommand("build", "Generate n-sense task instances with dev/test splits");
  build->add_option("--inventory", tb.inventory, "Sense inventory JSON document")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("--out-dir", tb.out_dir, "Directory for nN.dev.jsonl / nN.test.jsonl / stats.txt")
      ->required();
  build->add_option("--n", tb.n_senses, "Numbers of senses to distinguish (2-5)")
      ->check(CLI::Range(2, 5))
      ->capture_default_str();
  build->add_option("--seed", tb.seed, "Random seed")->capture_default_str();
  build->add_option("--dev-fraction", tb.dev_fraction, "Fraction of lemmas assigned to dev")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  build->add_option("--pos", tb.pos, "Restrict to one part of speech (adjective, noun, verb)");
  build->add_flag("--at-least-n", tb.at_least_n,
                  "Admit lexemes with >= n qualifying senses instead of > n");
  build->add_option("--repeat", tb.repeat, "Instances per eligible lexeme")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // eval wsd / eval phrase
  auto* eval = app.add_subcommand("eval", "Evaluation");
  eval->require_subcommand(1);

  EvalWsdOptions ew;
  auto* wsd = eval->add_subcommand("wsd", "Score a task file with one prediction strategy");
  wsd->add_option("--tasks", ew.tasks, "Task file (JSON lines)")->required()->check(CLI::ExistingFile);
  wsd->add_option("--strategy", ew.strategy, "Prediction strategy")
      ->required()
      ->check(CLI::IsMember({"single", "multi", "multi-oracle", "overlap", "random"}));
  add_embedding_flags(wsd, ew.emb);
  wsd->add_option("--context", ew.context, "Window radius 1, 2, 4 or 'dep'")
      ->check(CLI::IsMember({"1", "2", "4", "dep"}))
      ->capture_default_str();
  wsd->add_option("--stopwords", ew.stopwords, "Stop-word list, one per line (default: bundled)")
      ->check(CLI::ExistingFile);
  wsd->add_flag("--no-stopwords", ew.no_stopwords, "Keep stop words in context windows");
  wsd->add_option("--oov-policy", ew.oov_policy, "Out-of-vocabulary target handling")
      ->check(CLI::IsMember({"random", "fail"}))
      ->capture_default_str();
  wsd->add_option("--labels", ew.labels, "Sense labels 'tokens<TAB>sense_id' for multi-oracle")
      ->check(CLI::ExistingFile);
  wsd->add_option("--freq", ew.freq, "Frequency table 'token<TAB>count' for per-band accuracy")
      ->check(CLI::ExistingFile);
  wsd->add_option("--band-edges", ew.band_edges, "Comma-separated lower band edges")
      ->capture_default_str();
  wsd->add_option("--seed", ew.seed, "Random seed for tie-breaking")->capture_default_str();
  wsd->add_option("--jobs", ew.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  wsd->add_option("--predictions", ew.predictions_out, "Write per-instance predictions (JSON lines)");
  wsd->add_option("--report", ew.report_out, "Write the report record (JSON)");
  wsd->add_option("--format", ew.format, "Standard output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();

  EvalPhraseOptions ep;
  auto* phrase = eval->add_subcommand("phrase", "Correlate phrase similarities with human judgments");
  phrase->add_option("--pairs", ep.pairs, "Judgments: participant category w1 w2 w3 w4 score")
      ->required()
      ->check(CLI::ExistingFile);
  add_embedding_flags(phrase, ep.emb);
  phrase->add_option("--mode", ep.modes, "single | max | min | mean (repeatable)")
      ->check(CLI::IsMember({"single", "max", "min", "mean"}))
      ->capture_default_str();
  phrase->add_option("--rho-mode", ep.rho_mode, "Correlate per judgment or per averaged pair")
      ->check(CLI::IsMember({"per-judgment", "per-pair"}))
      ->capture_default_str();
  phrase->add_option("--name", ep.name, "Model name shown in the table");
  phrase->add_option("--report", ep.report_out, "Write report records (JSON lines)");
  phrase->add_option("--format", ep.format, "Standard output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();

  SignificanceOptions sg;
  auto* sig = app.add_subcommand("significance", "Paired permutation test between two prediction files");
  sig->add_option("--a", sg.a, "Predictions of system A")->required()->check(CLI::ExistingFile);
  sig->add_option("--b", sg.b, "Predictions of system B")->required()->check(CLI::ExistingFile);
  sig->add_option("--rounds", sg.rounds, "Permutation rounds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sig->add_option("--seed", sg.seed, "Random seed")->capture_default_str();
  sig->add_option("--format", sg.format, "Standard output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();

  FreqBandsOptions fb;
  auto* freq = app.add_subcommand("freq", "Frequency analysis");
  freq->require_subcommand(1);
  auto* bands = freq->add_subcommand("bands", "Frequency-band distribution and balanced sampling");
  bands->add_option("--freq", fb.freq, "Frequency table 'token<TAB>count'")
      ->required()
      ->check(CLI::ExistingFile);
  bands->add_option("--tasks", fb.tasks, "Task files")->required()->check(CLI::ExistingFile);
  bands->add_option("--edges", fb.edges, "Comma-separated lower band edges")->capture_default_str();
  bands->add_option("--sample-out", fb.sample_out,
                    "Write an equal-per-band sample of the instances (JSON lines)");
  bands->add_option("--seed", fb.seed, "Random seed for sampling")->capture_default_str();
  bands->add_option("--format", fb.format, "Standard output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) return run_task_build(tb);
    if (*wsd) return run_eval_wsd(ew);
    if (*phrase) return run_eval_phrase(ep);
    if (*sig) return run_significance(sg);
    if (*bands) return run_freq_bands(fb);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
