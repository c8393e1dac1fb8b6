#include "sensecomp/task_builder.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sensecomp/error.hpp"

namespace sensecomp {

void TaskSpec::validate() const {
  if (n_senses < 2 || n_senses > 5)
    throw UsageError("number of senses must be in [2, 5], got " + std::to_string(n_senses));
  if (!(dev_fraction > 0.0 && dev_fraction < 1.0))
    throw UsageError("dev fraction must lie strictly between 0 and 1");
  if (repeat < 1) throw UsageError("repeat factor must be at least 1");
}

void WsdInstance::validate() const {
  auto fail = [&](const std::string& what) { throw DataError("instance " + id + ": " + what); };
  if (options.size() < 2) fail("needs at least two options");
  if (gold_index >= options.size()) fail("gold index out of range");
  std::set<std::string> ids;
  std::size_t target_matches = 0;
  for (const auto& opt : options) {
    if (!ids.insert(opt.sense_id).second) fail("repeated option sense '" + opt.sense_id + "'");
    if (opt.sense_id == target_sense_id) ++target_matches;
    opt.sentence.validate();
  }
  if (target_matches != 1) fail("exactly one option must carry the target sense");
  if (options[gold_index].sense_id != target_sense_id) fail("gold option has the wrong sense");
  target.validate();
  if (target.tokens == options[gold_index].sentence.tokens)
    fail("target sentence repeats as the gold option");
}

std::vector<const Sense*> qualifying_senses(const Lexeme& lexeme) {
  std::vector<const Sense*> out;
  for (const Sense& s : lexeme.senses)
    if (s.examples.size() >= 2) out.push_back(&s);
  std::sort(out.begin(), out.end(),
            [](const Sense* a, const Sense* b) { return a->sense_id < b->sense_id; });
  return out;
}

std::vector<const Lexeme*> eligible_lexemes(const SenseInventory& inv, int n, Eligibility rule,
                                            std::optional<Pos> pos_filter) {
  if (n < 2) throw UsageError("number of senses must be at least 2");
  const std::size_t need = static_cast<std::size_t>(rule == Eligibility::more_than_n ? n + 1 : n);
  std::vector<const Lexeme*> out;
  for (const Lexeme& lx : inv.lexemes) {
    if (pos_filter && lx.pos != *pos_filter) continue;
    if (qualifying_senses(lx).size() >= need) out.push_back(&lx);
  }
  std::sort(out.begin(), out.end(), [](const Lexeme* a, const Lexeme* b) {
    return std::tie(a->lemma, a->pos) < std::tie(b->lemma, b->pos);
  });
  return out;
}

namespace {

WsdInstance build_one(const Lexeme& lx, const TaskSpec& spec, int rep) {
  const std::string pos_name(to_string(lx.pos));
  const std::string n_tag = std::to_string(spec.n_senses);
  const std::string rep_tag = std::to_string(rep);
  auto stream = [&](std::string_view site) {
    return RandomStream::derive(spec.seed, {"task", lx.lemma, pos_name, n_tag, rep_tag, site});
  };

  const auto senses = qualifying_senses(lx);
  const auto n = static_cast<std::size_t>(spec.n_senses);

  auto sense_rng = stream("senses");
  std::vector<const Sense*> chosen;
  for (std::size_t i : sense_rng.sample_indices(senses.size(), n)) chosen.push_back(senses[i]);

  auto target_rng = stream("target");
  const std::size_t t = target_rng.uniform_index(n);
  const Sense& target = *chosen[t];

  auto example_rng = stream("examples");
  auto pair = example_rng.sample_indices(target.examples.size(), 2);

  WsdInstance inst;
  inst.id = lx.lemma + "/" + pos_name + "/" + rep_tag;
  inst.lemma = lx.lemma;
  inst.pos = lx.pos;
  inst.target_sense_id = target.sense_id;
  inst.target = target.examples[pair[0]];
  inst.options.push_back({target.examples[pair[1]], target.sense_id});
  for (std::size_t i = 0; i < n; ++i) {
    if (i == t) continue;
    const Sense& other = *chosen[i];
    inst.options.push_back(
        {other.examples[example_rng.uniform_index(other.examples.size())], other.sense_id});
  }

  auto shuffle_rng = stream("shuffle");
  shuffle_rng.shuffle(inst.options);
  for (std::size_t i = 0; i < inst.options.size(); ++i)
    if (inst.options[i].sense_id == inst.target_sense_id) inst.gold_index = i;
  return inst;
}

}  // namespace

std::vector<WsdInstance> build_instances(const SenseInventory& inv, const TaskSpec& spec) {
  spec.validate();
  std::vector<WsdInstance> out;
  for (const Lexeme* lx : eligible_lexemes(inv, spec.n_senses, spec.eligibility, spec.pos_filter))
    for (int rep = 0; rep < spec.repeat; ++rep) out.push_back(build_one(*lx, spec, rep));
  return out;
}

TaskSplit split_dev_test(const std::vector<WsdInstance>& instances, const TaskSpec& spec) {
  spec.validate();
  std::set<std::string> lemma_set;
  for (const auto& inst : instances) lemma_set.insert(inst.lemma);
  std::vector<std::string> lemmas(lemma_set.begin(), lemma_set.end());

  auto rng = RandomStream::derive(spec.seed, {"split", std::to_string(spec.n_senses)});
  rng.shuffle(lemmas);
  const auto n_dev = static_cast<std::size_t>(
      std::llround(spec.dev_fraction * static_cast<double>(lemmas.size())));
  const std::set<std::string> dev_lemmas(lemmas.begin(),
                                         lemmas.begin() + static_cast<std::ptrdiff_t>(n_dev));

  TaskSplit split;
  for (Pos p : kAllPos) split.per_pos[p];
  for (const auto& inst : instances) {
    if (dev_lemmas.contains(inst.lemma)) {
      split.dev.push_back(inst);
      ++split.per_pos[inst.pos].dev;
    } else {
      split.test.push_back(inst);
      ++split.per_pos[inst.pos].test;
    }
  }
  return split;
}

}  // namespace sensecomp
