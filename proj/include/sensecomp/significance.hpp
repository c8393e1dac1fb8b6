#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sensecomp/random.hpp"

namespace sensecomp {

inline constexpr std::size_t kDefaultPermutationRounds = 10'000;

struct SignificanceResult {
  double p_value = 1.0;
  double observed_diff = 0.0;  // |mean(A) - mean(B)|
  double mean_a = 0.0;
  double mean_b = 0.0;
  std::size_t exceed_count = 0;
  std::size_t rounds = 0;
  std::uint64_t seed = 0;
};

// Two-sided randomised paired permutation test on per-item correctness.
// Each round swaps every (A_i, B_i) pair with probability 1/2 and counts the
// rounds whose |mean difference| reaches the observed one;
// p = (count + 1) / (rounds + 1).
SignificanceResult permutation_test(const std::vector<bool>& a, const std::vector<bool>& b,
                                    std::size_t rounds = kDefaultPermutationRounds,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace sensecomp
