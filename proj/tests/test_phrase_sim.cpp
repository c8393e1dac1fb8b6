#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sensecomp/error.hpp"
#include "sensecomp/phrase_sim.hpp"
#include "sensecomp/spearman.hpp"

using namespace sensecomp;

namespace {

std::optional<double> rho(std::vector<double> x, std::vector<double> y) { return spearman(x, y); }

std::vector<PhrasePair> pairs_from(const std::string& text) {
  std::istringstream in(text);
  return load_pairs(in);
}

}  // namespace

TEST_CASE("spearman examples") {
  CHECK(*rho({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}) == doctest::Approx(1.0));
  CHECK(*rho({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}) == doctest::Approx(-1.0));
  CHECK(*rho({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(0.8));
  CHECK_FALSE(rho({1, 1, 1}, {1, 2, 3}).has_value());
  CHECK_THROWS_AS(rho({1}, {1}), UsageError);
  CHECK_THROWS_AS(rho({1, 2}, {1, 2, 3}), UsageError);
}

TEST_CASE("average ranks share tied positions") {
  std::vector<double> v{10, 20, 20, 5};
  CHECK(average_ranks(v) == std::vector<double>{2, 3.5, 3.5, 1});
}

TEST_CASE("spearman properties against the pairwise oracle") {
  std::mt19937 gen(2024);
  std::uniform_real_distribution<double> real(-5, 5);
  std::uniform_int_distribution<int> small(0, 4);
  std::uniform_int_distribution<int> length(3, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = length(gen);
    const bool ties = trial % 2 == 1;
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = ties ? small(gen) : real(gen);
      y[i] = ties ? small(gen) : real(gen);
    }
    auto r = spearman(x, y);
    if (!r) continue;
    const double expected = ties ? oracle::spearman_with_ties(x, y) : oracle::spearman_tie_free(x, y);
    CHECK(std::abs(*r - expected) < 1e-12);
    CHECK(*spearman(y, x) == doctest::Approx(*r));

    std::vector<double> cubed(n);
    for (int i = 0; i < n; ++i) cubed[i] = x[i] * x[i] * x[i] + 3.0;
    CHECK(std::abs(*spearman(cubed, y) - *r) < 1e-12);
  }
}

TEST_CASE("load_pairs groups judgments") {
  auto pairs = pairs_from(
      "participant\ttype\tw1\tw2\tw3\tw4\tscore\n"
      "p1\tAN\tlarge\tnumber\tgreat\tmajority\t6\n"
      "p2\tAN\tlarge\tnumber\tgreat\tmajority\t4\n");
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].judgments.size() == 2);
  CHECK(pairs[0].mean_judgment() == 5.0);
  CHECK(pairs[0].phrase1 == std::array<std::string, 2>{"large", "number"});

  auto three = pairs_from(
      "p1,AN,a,b,c,d,1\np1,NN,e,f,g,h,2\np1,VO,i,j,k,l,3\n"
      "p2,VO,i,j,k,l,5\np2,AN,a,b,c,d,7\np2,NN,e,f,g,h,1\n");
  REQUIRE(three.size() == 3);
  CHECK(three[0].category == PhraseCategory::AN);
  CHECK(three[2].category == PhraseCategory::VO);
  CHECK(three[2].mean_judgment() == 4.0);

  auto ws = pairs_from("p1 adjectivenouns a b c d 2\n");
  CHECK(ws[0].category == PhraseCategory::AN);
}

TEST_CASE("load_pairs errors name the row") {
  try {
    pairs_from("p1\tAN\ta\tb\tc\td\t1\np1\tXY\ta\tb\tc\td\t1\n");
    FAIL("expected a category error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(pairs_from("p1\tAN\ta\tb\tc\td\n"), DataError);
  CHECK_THROWS_AS(pairs_from("p1\tAN\ta\tb\tc\td\tx\np2\tAN\ta\tb\tc\td\t1\n"), DataError);
}

TEST_CASE("score_pair") {
  EmbeddingTable t(2);
  t.insert("a", {1, 0});
  t.insert("b", {0, 1});
  t.insert("c", {1, 0});
  PhrasePair p;
  p.phrase1 = {"a", "b"};
  p.phrase2 = {"c", "b"};
  CHECK(*score_pair(t, p) == doctest::Approx(1.0));
  p.phrase2 = {"c", "c"};
  CHECK(*score_pair(t, p) == doctest::Approx(2.0 / std::sqrt(2.0) / 2.0));
  p.phrase2 = {"c", "zzz"};
  CHECK_FALSE(score_pair(t, p).has_value());

  SenseEmbeddingTable s(2);
  s.insert(SenseKey::make("a", "1"), {1, 0});
  s.insert(SenseKey::make("a", "2"), {0, 1});
  s.insert(SenseKey::make("b", "1"), {1, 0});
  s.insert(SenseKey::make("c", "1"), {1, 0});
  s.insert(SenseKey::make("d", "1"), {0, 1});
  PhrasePair q;
  q.phrase1 = {"a", "b"};
  q.phrase2 = {"c", "d"};
  // configurations: (1,0)+(1,0)=(2,0) or (0,1)+(1,0)=(1,1), against (1,1)
  CHECK(*score_pair(s, q, ScoreMode::max) == doctest::Approx(1.0));
  CHECK(*score_pair(s, q, ScoreMode::min) == doctest::Approx(std::sqrt(0.5)));
  CHECK(*score_pair(s, q, ScoreMode::mean) == doctest::Approx((1.0 + std::sqrt(0.5)) / 2));
  CHECK_THROWS_AS(score_pair(s, q, ScoreMode::single), UsageError);
}

TEST_CASE("model equal to human mean gives rho 1") {
  std::vector<PhrasePair> pairs;
  std::vector<std::optional<double>> scores;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 6; ++i) {
      PhrasePair p;
      p.category = kAllCategories[c];
      p.phrase1 = {"w" + std::to_string(i), "x"};
      p.phrase2 = {"y", "z"};
      p.judgments = {{"p1", 1.0 + i}, {"p2", 1.0 + i}};
      pairs.push_back(p);
      scores.push_back(0.1 * i);
    }
  }
  auto r = correlate(pairs, scores);
  for (auto c : kAllCategories) CHECK(*r.rho.at(c) == doctest::Approx(1.0));
  CHECK(*r.average == doctest::Approx(1.0));
  CHECK(r.n_judgments == 36);
  CHECK(*correlate(pairs, scores, RhoMode::per_pair).average == doctest::Approx(1.0));

  // Drop every NN score: the category is reported missing with a warning.
  for (std::size_t i = 6; i < 12; ++i) scores[i].reset();
  auto partial = correlate(pairs, scores);
  CHECK_FALSE(partial.rho.at(PhraseCategory::NN).has_value());
  CHECK(partial.skipped_pairs == 6);
  CHECK_FALSE(partial.warnings.empty());
  CHECK(*partial.average == doctest::Approx(1.0));
}

TEST_CASE("per-judgment and per-pair modes differ with noisy judgments") {
  std::vector<PhrasePair> pairs;
  std::vector<std::optional<double>> scores;
  const double human[4][2] = {{1, 7}, {2, 3}, {6, 5}, {4, 4}};
  for (int i = 0; i < 4; ++i) {
    PhrasePair p;
    p.phrase1 = {"a" + std::to_string(i), "b"};
    p.phrase2 = {"c", "d"};
    p.judgments = {{"p1", human[i][0]}, {"p2", human[i][1]}};
    pairs.push_back(p);
    scores.push_back(static_cast<double>(i));
  }
  auto per_j = correlate(pairs, scores, RhoMode::per_judgment);
  auto per_p = correlate(pairs, scores, RhoMode::per_pair);
  std::vector<double> xs, ys;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 2; ++k) {
      xs.push_back(i);
      ys.push_back(human[i][k]);
    }
  CHECK(*per_j.rho.at(PhraseCategory::AN) == doctest::Approx(oracle::spearman_with_ties(xs, ys)));
  std::vector<double> means{4, 2.5, 5.5, 4};
  CHECK(*per_p.rho.at(PhraseCategory::AN) ==
        doctest::Approx(oracle::spearman_with_ties({0, 1, 2, 3}, means)));
}

TEST_CASE("min <= mean <= max on random multi-sense tables") {
  std::mt19937 gen(5);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    SenseEmbeddingTable s(4);
    for (const char* w : {"a", "b", "c", "d"}) {
      const int k = 1 + trial % 3;
      for (int i = 0; i < k; ++i) {
        Vector v(4);
        for (auto& x : v) x = normal(gen);
        s.insert(SenseKey::make(w, std::to_string(i)), v);
      }
    }
    PhrasePair p;
    p.phrase1 = {"a", "b"};
    p.phrase2 = {"c", "d"};
    const double lo = *score_pair(s, p, ScoreMode::min);
    const double mid = *score_pair(s, p, ScoreMode::mean);
    const double hi = *score_pair(s, p, ScoreMode::max);
    CHECK(lo <= mid);
    CHECK(mid <= hi);
  }
}

TEST_CASE("correlation table layout") {
  CorrelationReport r;
  r.rho[PhraseCategory::AN] = 0.5;
  r.rho[PhraseCategory::NN] = std::nullopt;
  r.rho[PhraseCategory::VO] = 0.25;
  r.average = 0.375;
  auto text = format_correlation_table({{"toy", r}});
  CHECK(text.find("Model") != std::string::npos);
  CHECK(text.find("toy") != std::string::npos);
  CHECK(text.find("Average") != std::string::npos);
}
