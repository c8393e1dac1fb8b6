#include "sensecomp/frequency.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "sensecomp/error.hpp"
#include "text_util.hpp"

namespace sensecomp {

BandEdges BandEdges::standard() { return {{1, 1'000, 10'000, 50'000, 100'000}}; }

BandEdges BandEdges::merged() { return {{1, 10'000, 50'000}}; }

BandEdges BandEdges::parse(std::string_view text) {
  BandEdges edges;
  for (auto piece : detail::split_on(text, ',')) {
    piece = detail::trim(piece);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size())
      throw UsageError("band edge '" + std::string(piece) + "' is not a non-negative integer");
    edges.lower.push_back(v);
  }
  edges.validate();
  return edges;
}

void BandEdges::validate() const {
  if (lower.empty()) throw UsageError("at least one band edge is required");
  for (std::size_t i = 1; i < lower.size(); ++i)
    if (lower[i] <= lower[i - 1]) throw UsageError("band edges must be strictly increasing");
}

namespace {

std::string short_count(std::uint64_t v) {
  if (v >= 1'000'000 && v % 1'000'000 == 0) return std::to_string(v / 1'000'000) + "m";
  if (v >= 1'000 && v % 1'000 == 0) return std::to_string(v / 1'000) + "k";
  return std::to_string(v);
}

}  // namespace

std::string BandEdges::label(std::size_t band) const {
  const std::string lo = short_count(lower.at(band));
  const std::string hi = band + 1 < lower.size() ? short_count(lower[band + 1]) : "inf";
  return "[" + lo + "," + hi + ")";
}

void FrequencyTable::set(std::string token, std::uint64_t count) {
  counts_.insert_or_assign(detail::to_lower(token), count);
}

std::optional<std::uint64_t> FrequencyTable::count(std::string_view token) const {
  auto it = counts_.find(detail::to_lower(token));
  if (it == counts_.end()) return std::nullopt;
  return it->second;
}

FrequencyTable load_frequency_table(std::istream& in) {
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::trim(text).empty()) continue;
    auto fields = detail::split_on(text, '\t');
    if (fields.size() != 2)
      throw DataError("frequency line " + std::to_string(line_no) + ": expected token<TAB>count");
    auto c = detail::trim(fields[1]);
    std::uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
    if (ec != std::errc() || ptr != c.data() + c.size())
      throw DataError("frequency line " + std::to_string(line_no) + ": bad count '" +
                      std::string(c) + "'");
    table.set(std::string(fields[0]), count);
  }
  return table;
}

FrequencyTable load_frequency_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open frequency table '" + path + "'");
  return load_frequency_table(in);
}

BandAssignment assign_band(const FrequencyTable& freq, std::string_view lemma,
                           const BandEdges& edges) {
  edges.validate();
  BandAssignment out;
  auto count = freq.count(lemma);
  out.count = count.value_or(0);
  out.flagged = !count || out.count < edges.lower.front();
  auto it = std::upper_bound(edges.lower.begin(), edges.lower.end(), out.count);
  out.band = it == edges.lower.begin() ? 0
                                        : static_cast<std::size_t>(it - edges.lower.begin()) - 1;
  out.label = edges.label(out.band);
  return out;
}

std::vector<std::size_t> band_histogram(const FrequencyTable& freq,
                                        const std::vector<std::string>& lemmas,
                                        const BandEdges& edges) {
  std::vector<std::string> unique = lemmas;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<std::size_t> counts(edges.size(), 0);
  for (const auto& lemma : unique) ++counts[assign_band(freq, lemma, edges).band];
  return counts;
}

std::vector<WsdInstance> sample_equal_bands(const std::vector<WsdInstance>& instances,
                                            const FrequencyTable& freq, const BandEdges& edges,
                                            std::uint64_t seed) {
  edges.validate();
  std::vector<std::vector<std::size_t>> members(edges.size());
  for (std::size_t i = 0; i < instances.size(); ++i)
    members[assign_band(freq, instances[i].lemma, edges).band].push_back(i);

  std::size_t k = instances.size();
  for (std::size_t b = 0; b < members.size(); ++b) {
    if (members[b].empty()) throw DataError("frequency band " + edges.label(b) + " is empty");
    k = std::min(k, members[b].size());
  }

  std::vector<WsdInstance> out;
  out.reserve(k * members.size());
  for (std::size_t b = 0; b < members.size(); ++b) {
    auto rng = RandomStream::derive(seed, {"bands", edges.label(b)});
    auto picks = rng.sample_indices(members[b].size(), k);
    std::sort(picks.begin(), picks.end());
    for (std::size_t p : picks) out.push_back(instances[members[b][p]]);
  }
  return out;
}

}  // namespace sensecomp
