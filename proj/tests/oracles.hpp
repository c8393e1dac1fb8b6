#pragma once

// Independent reference computations used only by tests. None of these call
// into the library code they check.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace oracle {

// rank_i = #{x_j < x_i} + (#{x_j == x_i} + 1) / 2, counted pairwise.
inline std::vector<double> pairwise_ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double less = 0, equal = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < x[i]) ++less;
      if (x[j] == x[i]) ++equal;
    }
    r[i] = less + (equal + 1.0) / 2.0;
  }
  return r;
}

// Textbook product-moment correlation, two-pass.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double num = 0, dx2 = 0, dy2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    dx2 += (x[i] - mx) * (x[i] - mx);
    dy2 += (y[i] - my) * (y[i] - my);
  }
  return num / std::sqrt(dx2 * dy2);
}

// 1 - 6 sum(d^2) / (n (n^2 - 1)); valid only without ties.
inline double spearman_tie_free(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = pairwise_ranks(x), ry = pairwise_ranks(y);
  double d2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const double n = static_cast<double>(x.size());
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

inline double spearman_with_ties(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(pairwise_ranks(x), pairwise_ranks(y));
}

// Exact two-sided permutation p-value: fraction of all 2^n swap patterns
// whose |mean(A') - mean(B')| reaches the observed difference.
inline double exact_permutation_p(const std::vector<bool>& a, const std::vector<bool>& b) {
  const std::size_t n = a.size();
  auto diff = [&](std::uint32_t mask) {
    long sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool swap = (mask >> i) & 1u;
      sa += swap ? b[i] : a[i];
      sb += swap ? a[i] : b[i];
    }
    return std::labs(sa - sb);
  };
  const long observed = diff(0);
  std::size_t hits = 0;
  const std::uint32_t patterns = 1u << n;
  for (std::uint32_t m = 0; m < patterns; ++m)
    if (diff(m) >= observed) ++hits;
  return static_cast<double>(hits) / static_cast<double>(patterns);
}

}  // namespace oracle
