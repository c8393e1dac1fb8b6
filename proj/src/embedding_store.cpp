#include "sensecomp/embedding_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "sensecomp/error.hpp"
#include "text_util.hpp"

namespace sensecomp {

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw UsageError("embedding dimension must be positive");
}

const Vector* EmbeddingTable::find(std::string_view token) const {
  auto it = entries_.find(token);
  return it == entries_.end() ? nullptr : &it->second;
}

bool EmbeddingTable::insert(std::string token, Vector v) {
  if (v.size() != dimension_) {
    throw DataError("vector for '" + token + "' has " + std::to_string(v.size()) +
                    " components, expected " + std::to_string(dimension_));
  }
  auto [it, inserted] = entries_.insert_or_assign(std::move(token), std::move(v));
  return !inserted;
}

EmbeddingTable EmbeddingTable::scaled(double factor) const {
  EmbeddingTable out = *this;
  for (auto& [token, v] : out.entries_)
    for (double& x : v) x *= factor;
  return out;
}

SenseKey SenseKey::make(std::string_view lemma, std::string_view sense_id, char separator) {
  if (lemma.empty()) throw UsageError("sense key lemma is empty");
  if (sense_id.empty()) throw UsageError("sense key sense_id is empty");
  if (lemma.find(separator) != std::string_view::npos) {
    throw UsageError("sense key lemma '" + std::string(lemma) + "' contains the separator");
  }
  return SenseKey{detail::to_lower(lemma), std::string(sense_id)};
}

std::optional<SenseKey> SenseKey::parse(std::string_view rendered, char separator) {
  auto pos = rendered.find(separator);
  if (pos == std::string_view::npos || pos == 0 || pos + 1 == rendered.size())
    return std::nullopt;
  return SenseKey{detail::to_lower(rendered.substr(0, pos)),
                  std::string(rendered.substr(pos + 1))};
}

std::string SenseKey::render(char separator) const {
  std::string out = lemma;
  out += separator;
  out += sense_id;
  return out;
}

SenseEmbeddingTable::SenseEmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw UsageError("embedding dimension must be positive");
}

const Vector* SenseEmbeddingTable::find(const SenseKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

bool SenseEmbeddingTable::has_lemma(std::string_view lemma) const {
  return lemma_index_.find(lemma) != lemma_index_.end();
}

bool SenseEmbeddingTable::insert(SenseKey key, Vector v) {
  if (v.size() != dimension_) {
    throw DataError("vector for '" + key.render() + "' has " + std::to_string(v.size()) +
                    " components, expected " + std::to_string(dimension_));
  }
  auto [it, inserted] = entries_.insert_or_assign(key, std::move(v));
  if (inserted) {
    auto& keys = lemma_index_[key.lemma];
    keys.insert(std::upper_bound(keys.begin(), keys.end(), key), key);
  }
  return !inserted;
}

std::span<const SenseKey> SenseEmbeddingTable::keys_of(std::string_view lemma) const {
  auto it = lemma_index_.find(lemma);
  if (it == lemma_index_.end()) return {};
  return it->second;
}

SenseEmbeddingTable SenseEmbeddingTable::scaled(double factor) const {
  SenseEmbeddingTable out = *this;
  for (auto& [key, v] : out.entries_)
    for (double& x : v) x *= factor;
  return out;
}

namespace {

bool parse_double(std::string_view field, double& out) {
  // from_chars rejects a leading '+', which some writers emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() && std::isfinite(out);
}

bool parse_size(std::string_view field, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

struct Row {
  std::string token;
  Vector values;
};

Row parse_row(const std::vector<std::string_view>& fields, std::size_t line_no) {
  Row row;
  row.token = std::string(fields[0]);
  row.values.resize(fields.size() - 1);
  for (std::size_t i = 1; i < fields.size(); ++i) {
    if (!parse_double(fields[i], row.values[i - 1])) {
      throw DataError("line " + std::to_string(line_no) + ": non-numeric component '" +
                      std::string(fields[i]) + "'");
    }
  }
  return row;
}

bool is_header(const std::vector<std::string_view>& fields, std::size_t& count,
               std::size_t& dim) {
  return fields.size() == 2 && parse_size(fields[0], count) && parse_size(fields[1], dim);
}

void check_dimension(std::size_t got, std::size_t expected, std::size_t line_no) {
  if (got != expected) {
    throw DataError("line " + std::to_string(line_no) + ": dimension mismatch (" +
                    std::to_string(got) + " components, expected " +
                    std::to_string(expected) + ")");
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

}  // namespace

EmbeddingTable load_embeddings(std::istream& in, bool expect_header, LoadReport* report) {
  LoadReport local;
  LoadReport& rep = report ? *report : local;

  std::optional<std::size_t> header_count;
  std::optional<EmbeddingTable> table;
  std::size_t data_lines = 0;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;

  while (std::getline(in, line)) {
    ++line_no;
    auto fields = detail::split_ws(detail::strip_cr(line));
    if (fields.empty()) continue;
    ++rep.lines_read;

    if (first && expect_header) {
      first = false;
      std::size_t count = 0, dim = 0;
      if (!is_header(fields, count, dim) || dim == 0)
        throw DataError("line " + std::to_string(line_no) + ": expected 'count dim' header");
      header_count = count;
      table.emplace(dim);
      continue;
    }
    first = false;

    if (fields.size() < 2)
      throw DataError("line " + std::to_string(line_no) + ": token without vector components");
    Row row = parse_row(fields, line_no);
    if (!table) table.emplace(row.values.size());
    check_dimension(row.values.size(), table->dimension(), line_no);

    ++data_lines;
    std::string token = row.token;
    if (table->insert(std::move(row.token), std::move(row.values))) {
      ++rep.duplicates;
      rep.warnings.push_back("line " + std::to_string(line_no) + ": duplicate token '" +
                             token + "' overrides earlier vector");
    }
  }

  if (!table || data_lines == 0) throw DataError("embedding input is empty");
  if (header_count && *header_count != data_lines) {
    throw DataError("header announces " + std::to_string(*header_count) + " vectors but " +
                    std::to_string(data_lines) + " were read");
  }
  return std::move(*table);
}

EmbeddingTable load_embeddings_file(const std::string& path, bool expect_header,
                                    LoadReport* report) {
  auto in = open_or_throw(path);
  return load_embeddings(in, expect_header, report);
}

SenseEmbeddingTable load_sense_embeddings(std::istream& in, char separator,
                                          LoadReport* report) {
  LoadReport local;
  LoadReport& rep = report ? *report : local;

  std::optional<SenseEmbeddingTable> table;
  std::optional<std::size_t> header_dim;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;

  while (std::getline(in, line)) {
    ++line_no;
    auto fields = detail::split_ws(detail::strip_cr(line));
    if (fields.empty()) continue;
    ++rep.lines_read;

    std::size_t count = 0, dim = 0;
    if (first && is_header(fields, count, dim) && dim > 0) {
      first = false;
      header_dim = dim;
      continue;
    }
    first = false;

    auto key = SenseKey::parse(fields[0], separator);
    if (!key || fields.size() < 2) {
      ++rep.rejected_lines;
      rep.warnings.push_back("line " + std::to_string(line_no) + ": '" +
                             std::string(fields[0]) + "' is not a sense key, skipped");
      continue;
    }
    Row row = parse_row(fields, line_no);
    if (!table) table.emplace(header_dim.value_or(row.values.size()));
    check_dimension(row.values.size(), table->dimension(), line_no);

    if (table->insert(*key, std::move(row.values))) {
      ++rep.duplicates;
      rep.warnings.push_back("line " + std::to_string(line_no) + ": duplicate sense '" +
                             std::string(fields[0]) + "' overrides earlier vector");
    }
  }

  if (!table) throw DataError("sense embedding input has no valid sense keys");
  return std::move(*table);
}

SenseEmbeddingTable load_sense_embeddings_file(const std::string& path, char separator,
                                               LoadReport* report) {
  auto in = open_or_throw(path);
  return load_sense_embeddings(in, separator, report);
}

double cosine(std::span<const double> u, std::span<const double> v, bool* degenerate) {
  if (u.size() != v.size()) {
    throw UsageError("cosine of vectors with lengths " + std::to_string(u.size()) + " and " +
                     std::to_string(v.size()));
  }
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  if (degenerate) *degenerate = false;
  double c = dot / (std::sqrt(uu) * std::sqrt(vv));
  return std::clamp(c, -1.0, 1.0);
}

std::vector<std::pair<SenseKey, const Vector*>> senses_of(const SenseEmbeddingTable& table,
                                                          std::string_view lemma) {
  std::vector<std::pair<SenseKey, const Vector*>> out;
  for (const SenseKey& key : table.keys_of(lemma)) out.emplace_back(key, table.find(key));
  return out;
}

std::optional<Vector> sense_centroid(const SenseEmbeddingTable& table, std::string_view lemma) {
  auto keys = table.keys_of(lemma);
  if (keys.empty()) return std::nullopt;
  Vector mean(table.dimension(), 0.0);
  for (const SenseKey& key : keys) {
    const Vector& v = *table.find(key);
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += v[i];
  }
  const double n = static_cast<double>(keys.size());
  for (double& x : mean) x /= n;
  return mean;
}

}  // namespace sensecomp
