#include "sensecomp/significance.hpp"

#include <bit>
#include <cstdlib>

#include "sensecomp/error.hpp"

namespace sensecomp {

namespace {

// Number of heads in `n` fair coin flips.
std::int64_t heads(RandomStream& rng, std::size_t n) {
  std::int64_t total = 0;
  for (; n >= 64; n -= 64) total += std::popcount(rng.next());
  if (n > 0) total += std::popcount(rng.next() >> (64 - n));
  return total;
}

}  // namespace

SignificanceResult permutation_test(const std::vector<bool>& a, const std::vector<bool>& b,
                                    std::size_t rounds, std::uint64_t seed) {
  if (a.size() != b.size())
    throw UsageError("permutation test needs paired outcomes of equal length");
  if (a.empty()) throw UsageError("permutation test needs at least one paired outcome");
  if (rounds < 1) throw UsageError("permutation test needs at least one round");

  // Concordant pairs never change the difference; only the discordant
  // ones (A right / B wrong and vice versa) matter when swapped.
  std::int64_t only_a = 0, only_b = 0, sum_a = 0, sum_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum_a += a[i];
    sum_b += b[i];
    only_a += a[i] && !b[i];
    only_b += !a[i] && b[i];
  }
  const std::int64_t observed = std::llabs(only_a - only_b);

  auto rng = RandomStream::derive(seed, {"permutation"});
  std::size_t exceed = 0;
  for (std::size_t r = 0; r < rounds; ++r) {
    // A swapped only_a pair moves +1 to -1, and an only_b pair -1 to +1.
    const std::int64_t swapped_a = heads(rng, static_cast<std::size_t>(only_a));
    const std::int64_t swapped_b = heads(rng, static_cast<std::size_t>(only_b));
    const std::int64_t diff = (only_a - 2 * swapped_a) - (only_b - 2 * swapped_b);
    if (std::llabs(diff) >= observed) ++exceed;
  }

  const double n = static_cast<double>(a.size());
  SignificanceResult res;
  res.mean_a = static_cast<double>(sum_a) / n;
  res.mean_b = static_cast<double>(sum_b) / n;
  res.observed_diff = static_cast<double>(observed) / n;
  res.exceed_count = exceed;
  res.rounds = rounds;
  res.seed = seed;
  res.p_value = static_cast<double>(exceed + 1) / static_cast<double>(rounds + 1);
  return res;
}

}  // namespace sensecomp
