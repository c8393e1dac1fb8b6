#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "sensecomp/composer.hpp"
#include "sensecomp/error.hpp"
#include "synthetic.hpp"

using namespace sensecomp;

namespace {

ContextWindow window(std::vector<std::string> words, std::string lemma = "t") {
  ContextWindow w;
  w.words = std::move(words);
  w.target_lemma = std::move(lemma);
  return w;
}

ComposedVariant variant(std::string sense, Vector v) {
  return {{SenseKey::make("w", sense)}, std::move(v)};
}

}  // namespace

TEST_CASE("compose sums elementwise") {
  CHECK(compose(std::vector<Vector>{{1, 0}, {0, 1}}) == Vector{1, 1});
  CHECK(compose(std::vector<Vector>{{2, 2}}) == Vector{2, 2});
  CHECK(compose(std::vector<Vector>{{1, 2}, {3, 4}, {-4, -6}}) == Vector{0, 0});
  CHECK_THROWS_AS(compose(std::vector<Vector>{}), UsageError);
  CHECK_THROWS_AS(compose(std::vector<Vector>{{1}, {1, 2}}), UsageError);
}

TEST_CASE("compose is permutation invariant on integer-valued vectors") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vector> vs(2 + rng() % 5, Vector(4));
    for (auto& v : vs)
      for (auto& x : v) x = static_cast<double>(static_cast<int>(rng() % 21) - 10);
    auto sum = compose(vs);
    std::shuffle(vs.begin(), vs.end(), rng);
    CHECK(compose(vs) == sum);
  }
}

TEST_CASE("contextualize_single") {
  EmbeddingTable t(2);
  t.insert("t", {1, 0});
  t.insert("a", {0, 1});
  t.insert("b", {0, 2});

  auto r = contextualize_single(t, "t", window({"a", "b"}));
  CHECK(r.vector == Vector{1, 3});
  CHECK(r.oov_context == 0);

  CHECK(contextualize_single(t, "t", window({})).vector == Vector{1, 0});

  auto oov = contextualize_single(t, "t", window({"a", "zzz"}));
  CHECK(oov.vector == Vector{1, 1});
  CHECK(oov.oov_context == 1);

  auto missing = contextualize_single(t, "q", window({"a"}, "q"));
  CHECK(missing.target_oov);
  CHECK_THROWS_AS(contextualize_single(t, "q", window({"a"}, "q"), OovPolicy::fail), DataError);

  // A surface form that is OOV falls back to the lemma.
  auto fallback = contextualize_single(t, "ts", window({"a"}, "t"));
  CHECK(fallback.vector == Vector{1, 1});
}

TEST_CASE("contextualize_multi") {
  SenseEmbeddingTable t(2);
  t.insert(SenseKey::make("t", "1"), {1, 0});
  t.insert(SenseKey::make("t", "2"), {0, 1});
  t.insert(SenseKey::make("c", "1"), {0, 1});

  auto raw = contextualize_multi(t, "t", window({}));
  REQUIRE(raw.size() == 2);
  CHECK(raw[0].vector == Vector{1, 0});
  CHECK(raw[1].vector == Vector{0, 1});

  SenseEmbeddingTable one(2);
  one.insert(SenseKey::make("t", "1"), {1, 0});
  one.insert(SenseKey::make("c", "1"), {0, 1});
  auto v = contextualize_multi(one, "t", window({"c"}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].vector == Vector{1, 1});

  SenseEmbeddingTable three(2);
  for (auto s : {"a", "b", "c"}) three.insert(SenseKey::make("t", s), {1, 1});
  std::size_t oov = 0;
  CHECK(contextualize_multi(three, "t", window({"x", "y"}), &oov).size() == 3);
  CHECK(oov == 2);

  CHECK_THROWS_AS(contextualize_multi(t, "nope", window({})), DataError);
}

TEST_CASE("closest_variant_similarity") {
  const std::vector<ComposedVariant> e1{variant("1", {1, 0})};
  CHECK(closest_variant_similarity(e1, e1).similarity == doctest::Approx(1.0));

  const std::vector<ComposedVariant> a{variant("1", {1, 0}), variant("2", {0, 1})};
  const std::vector<ComposedVariant> b{variant("2", {0, 1})};
  auto best = closest_variant_similarity(a, b);
  CHECK(best.similarity == doctest::Approx(1.0));
  CHECK(best.a_index == 1);

  // Both pairs score 1/sqrt(2); the lexicographically first sense of `a` wins.
  const std::vector<ComposedVariant> c{variant("x", {1, 1})};
  auto tie = closest_variant_similarity(a, c);
  CHECK(tie.similarity == doctest::Approx(0.70710678118).epsilon(1e-10));
  CHECK(tie.a_index == 0);

  CHECK_THROWS_AS(closest_variant_similarity({}, c), UsageError);
}

TEST_CASE("closest_variant_similarity is symmetric in value") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ComposedVariant> a(1 + rng() % 4), b(1 + rng() % 4);
    for (auto* side : {&a, &b})
      for (auto& v : *side) {
        v.vector.resize(5);
        for (auto& x : v.vector) x = g(rng);
      }
    CHECK(closest_variant_similarity(a, b).similarity ==
          closest_variant_similarity(b, a).similarity);
  }
}

TEST_CASE("enumerate_phrase_configs") {
  SenseEmbeddingTable t(2);
  t.insert(SenseKey::make("w1", "a"), {1, 0});
  t.insert(SenseKey::make("w2", "a"), {0, 1});
  t.insert(SenseKey::make("w2", "b"), {0, 2});
  auto set = enumerate_phrase_configs(t, "w1", "w2");
  REQUIRE(set.variants.size() == 2);
  CHECK(set.variants[0].vector == Vector{1, 1});
  CHECK(set.variants[1].vector == Vector{1, 2});
  CHECK(set.variants[1].senses.size() == 2);

  auto big = synth::make_random_sense_table({"x", "y"}, 3, 2, 3, 1);
  auto xy = enumerate_phrase_configs(big, "x", "y");
  CHECK(xy.variants.size() == big.keys_of("x").size() * big.keys_of("y").size());

  SenseEmbeddingTable six(1);
  for (auto s : {"1", "2"}) six.insert(SenseKey::make("p", s), {1});
  for (auto s : {"1", "2", "3"}) six.insert(SenseKey::make("q", s), {1});
  CHECK(enumerate_phrase_configs(six, "p", "q").variants.size() == 6);

  EmbeddingTable words(2);
  words.insert("a", {1, 0});
  words.insert("b", {0, 3});
  auto mono = enumerate_phrase_configs(words, "a", "b");
  REQUIRE(mono.variants.size() == 1);
  CHECK(mono.variants[0].is_mono());
  CHECK(mono.variants[0].vector == Vector{1, 3});

  CHECK_THROWS_AS(enumerate_phrase_configs(words, "a", "zz"), DataError);
  CHECK_THROWS_AS(enumerate_phrase_configs(t, "w1", "zz"), DataError);
}

TEST_CASE("configuration_similarity modes") {
  SenseConfigurationSet single1{"a", "b", {variant("1", {1, 0})}};
  SenseConfigurationSet single2{"c", "d", {variant("1", {1, 1})}};
  const double mx = configuration_similarity(single1, single2, ConfigMode::max);
  CHECK(configuration_similarity(single1, single2, ConfigMode::min) == mx);
  CHECK(configuration_similarity(single1, single2, ConfigMode::mean) == mx);

  // cos = 0.2 and 0.8 against the reference direction (1, 0)
  auto at = [](double c) { return Vector{c, std::sqrt(1 - c * c)}; };
  SenseConfigurationSet two{"a", "b", {variant("1", at(0.2)), variant("2", at(0.8))}};
  SenseConfigurationSet ref{"c", "d", {variant("1", {1, 0})}};
  CHECK(configuration_similarity(two, ref, ConfigMode::max) == doctest::Approx(0.8));
  CHECK(configuration_similarity(two, ref, ConfigMode::min) == doctest::Approx(0.2));
  CHECK(configuration_similarity(two, ref, ConfigMode::mean) == doctest::Approx(0.5));

  SenseConfigurationSet empty{"a", "b", {}};
  CHECK_THROWS_AS(configuration_similarity(empty, ref, ConfigMode::max), UsageError);
}

TEST_CASE("min <= mean <= max, including all-equal cases") {
  SenseConfigurationSet same{"a", "b", {}};
  for (int i = 0; i < 3; ++i) same.variants.push_back(variant(std::to_string(i), {0.1, 0.3}));
  SenseConfigurationSet other{"c", "d", {variant("1", {0.7, 0.1})}};
  const double lo = configuration_similarity(same, other, ConfigMode::min);
  const double mean = configuration_similarity(same, other, ConfigMode::mean);
  const double hi = configuration_similarity(same, other, ConfigMode::max);
  CHECK(lo <= mean);
  CHECK(mean <= hi);
}

TEST_CASE("one sense per lemma: multi and single contextualization agree exactly") {
  synth::InventoryShape shape;
  shape.lexemes = 30;
  auto twins = synth::make_twin_tables(shape, 8, 0.3, 4);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t l = rng() % shape.lexemes;
    std::vector<std::string> words;
    for (int k = 0; k < 4; ++k)
      words.push_back(synth::context_word(l, rng() % shape.senses, rng() % shape.vocabulary));
    const auto w = window(words, synth::lemma_name(l));
    auto single = contextualize_single(twins.words, synth::lemma_name(l), w);
    auto multi = contextualize_multi(twins.senses, synth::lemma_name(l), w);
    REQUIRE(multi.size() == 1);
    CHECK(multi[0].vector == single.vector);
  }
}
