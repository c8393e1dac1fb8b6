#include <sstream>

#include "doctest.h"
#include "sensecomp/error.hpp"
#include "sensecomp/frequency.hpp"
#include "synthetic.hpp"

using namespace sensecomp;

namespace {

FrequencyTable table(const std::string& text) {
  std::istringstream in(text);
  return load_frequency_table(in);
}

WsdInstance fake(const std::string& lemma) {
  WsdInstance i;
  i.id = lemma;
  i.lemma = lemma;
  return i;
}

}  // namespace

TEST_CASE("band assignment on the standard edges") {
  auto freq = table("ruffle\t57\nbe\t1800000\nedge\t10000\nzero\t0\nrow\t999\n");
  CHECK(assign_band(freq, "ruffle").label == "[1,1k)");
  CHECK(assign_band(freq, "ruffle").band == 0);
  CHECK(assign_band(freq, "be").band == 4);
  CHECK(assign_band(freq, "be").label == "[100k,inf)");
  CHECK(assign_band(freq, "edge").label == "[10k,50k)");
  CHECK(assign_band(freq, "row").band == 0);

  auto unknown = assign_band(freq, "nothere");
  CHECK(unknown.band == 0);
  CHECK(unknown.flagged);
  CHECK(assign_band(freq, "zero").flagged);
  CHECK_FALSE(assign_band(freq, "ruffle").flagged);
}

TEST_CASE("merged edges") {
  auto freq = table("a\t5\nb\t9999\nc\t10000\nd\t60000\ne\t2000000\n");
  const auto merged = BandEdges::merged();
  CHECK(assign_band(freq, "a", merged).band == 0);
  CHECK(assign_band(freq, "b", merged).band == 0);
  CHECK(assign_band(freq, "c", merged).band == 1);
  CHECK(assign_band(freq, "d", merged).band == 2);
  CHECK(assign_band(freq, "e", merged).band == 2);
  CHECK(merged.label(2) == "[50k,inf)");
}

TEST_CASE("band edges parsing") {
  CHECK(BandEdges::parse("1, 10000,50000").lower == std::vector<std::uint64_t>{1, 10000, 50000});
  CHECK_THROWS_AS(BandEdges::parse("1,1"), UsageError);
  CHECK_THROWS_AS(BandEdges::parse("1,x"), UsageError);
}

TEST_CASE("frequency table format errors") {
  CHECK_THROWS_AS(table("a 5\n"), DataError);
  CHECK_THROWS_AS(table("a\tfive\n"), DataError);
  CHECK(table("A\t3\r\n").count("a") == 3u);
}

TEST_CASE("sample_equal_bands") {
  std::string text;
  std::vector<WsdInstance> instances;
  // 5 low, 9 mid, 7 high
  for (int i = 0; i < 5; ++i) {
    text += "lo" + std::to_string(i) + "\t10\n";
    instances.push_back(fake("lo" + std::to_string(i)));
  }
  for (int i = 0; i < 9; ++i) {
    text += "mid" + std::to_string(i) + "\t20000\n";
    instances.push_back(fake("mid" + std::to_string(i)));
  }
  for (int i = 0; i < 7; ++i) {
    text += "hi" + std::to_string(i) + "\t70000\n";
    instances.push_back(fake("hi" + std::to_string(i)));
  }
  auto freq = table(text);
  auto sample = sample_equal_bands(instances, freq, BandEdges::merged(), 7);
  CHECK(sample.size() == 15);
  std::vector<std::size_t> per_band(3, 0);
  for (const auto& i : sample) ++per_band[assign_band(freq, i.lemma, BandEdges::merged()).band];
  CHECK(per_band == std::vector<std::size_t>{5, 5, 5});

  auto again = sample_equal_bands(instances, freq, BandEdges::merged(), 7);
  for (std::size_t i = 0; i < sample.size(); ++i) CHECK(again[i].id == sample[i].id);

  instances.erase(instances.begin() + 5, instances.begin() + 14);  // drop the middle band
  try {
    sample_equal_bands(instances, freq, BandEdges::merged(), 7);
    FAIL("expected an empty-band error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("[10k,50k)") != std::string::npos);
  }
}

TEST_CASE("band_histogram counts distinct lemmas") {
  auto freq = table("a\t5\nb\t5000\n");
  auto h = band_histogram(freq, {"a", "a", "b", "c"}, BandEdges::standard());
  CHECK(h == std::vector<std::size_t>{2, 1, 0, 0, 0});
}
