#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

#include "vboe/types.h"

namespace vboe::stats {

// Throws EmptyInput.
double empirical_average(const std::vector<Bit>& bits);

// Standard error of a frequency p estimated from n samples.
inline double standard_error(double p, std::size_t n) {
  return n == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// Half the L1 distance between the empirical distributions of two samples.
// Throws EmptyInput.
template <typename T>
double tvd_estimate(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyInput, "tvd_estimate needs two nonempty samples");
  std::map<T, std::pair<double, double>> counts;
  for (const auto& x : a) counts[x].first += 1.0;
  for (const auto& x : b) counts[x].second += 1.0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double total = 0.0;
  for (const auto& [key, c] : counts) total += std::abs(c.first / na - c.second / nb);
  return total / 2.0;
}

// Half the L1 distance between two distributions on the same index set.
double tvd(const std::vector<double>& p, const std::vector<double>& q);

// Empirical distribution of sample indices in [0, size).
std::vector<double> histogram(const std::vector<std::size_t>& samples, std::size_t size);

// Pearson goodness of fit: p-value of the observed counts against the
// expected probabilities. Cells with zero expectation must be empty.
double chi_square_p_value(const std::vector<std::size_t>& observed, const std::vector<double>& expected);

// Pearson test that two samples of counts come from one distribution.
// Cells empty in both samples are dropped.
double chi_square_homogeneity_p_value(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace vboe::stats
