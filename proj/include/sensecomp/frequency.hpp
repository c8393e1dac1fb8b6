#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "sensecomp/embedding_store.hpp"
#include "sensecomp/task_builder.hpp"

namespace sensecomp {

// Lower edges of right-open frequency bands; the last band is unbounded.
// {1, 1000} describes [1,1k) and [1k,inf).
struct BandEdges {
  std::vector<std::uint64_t> lower;

  // [1,1k) [1k,10k) [10k,50k) [50k,100k) [100k,inf)
  static BandEdges standard();
  // Lowest two and highest two standard bands merged: [1,10k) [10k,50k) [50k,inf)
  static BandEdges merged();
  // Comma-separated lower edges, e.g. "1,10000,50000".
  static BandEdges parse(std::string_view text);

  void validate() const;
  std::size_t size() const { return lower.size(); }
  std::string label(std::size_t band) const;
};

class FrequencyTable {
 public:
  void set(std::string token, std::uint64_t count);
  // nullopt for unknown tokens.
  std::optional<std::uint64_t> count(std::string_view token) const;
  std::size_t size() const { return counts_.size(); }

 private:
  StringMap<std::uint64_t> counts_;
};

// "token<TAB>count" lines; tokens are lowercased.
FrequencyTable load_frequency_table(std::istream& in);
FrequencyTable load_frequency_table_file(const std::string& path);

struct BandAssignment {
  std::size_t band = 0;
  std::string label;
  std::uint64_t count = 0;
  bool flagged = false;  // unknown lemma or count below the lowest edge
};

BandAssignment assign_band(const FrequencyTable& freq, std::string_view lemma,
                           const BandEdges& edges = BandEdges::standard());

// Number of distinct lemmas per band.
std::vector<std::size_t> band_histogram(const FrequencyTable& freq,
                                        const std::vector<std::string>& lemmas,
                                        const BandEdges& edges);

// k = smallest band size; k instances drawn without replacement from every
// band. Throws DataError naming the first empty band.
std::vector<WsdInstance> sample_equal_bands(const std::vector<WsdInstance>& instances,
                                            const FrequencyTable& freq, const BandEdges& edges,
                                            std::uint64_t seed);

}  // namespace sensecomp
