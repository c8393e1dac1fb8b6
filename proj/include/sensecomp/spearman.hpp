#pragma once

#include <optional>
#include <span>
#include <vector>

namespace sensecomp {

// 1-based ranks; tied values share the mean of the positions they occupy.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation; nullopt if either side is constant.
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys);

// Spearman's rho as the Pearson correlation of average ranks. Throws
// UsageError for mismatched lengths or fewer than two observations; returns
// nullopt when either side is constant.
std::optional<double> spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace sensecomp
