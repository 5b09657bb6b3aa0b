#include "vboe/stats/estimators.h"

#include <boost/math/distributions/chi_squared.hpp>

namespace vboe::stats {

namespace {

double chi_square_survival(double statistic, double dof) {
  if (dof <= 0.0) return 1.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared_distribution<double>(dof), statistic));
}

}  // namespace

double empirical_average(const std::vector<Bit>& bits) {
  if (bits.empty()) throw Error(ErrorCode::EmptyInput, "empirical average of no samples");
  std::size_t ones = 0;
  for (Bit b : bits) ones += b & 1u;
  return static_cast<double>(ones) / static_cast<double>(bits.size());
}

double tvd(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::DimensionMismatch, "distributions over different index sets");
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += std::abs(p[i] - q[i]);
  return total / 2.0;
}

std::vector<double> histogram(const std::vector<std::size_t>& samples, std::size_t size) {
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "histogram of no samples");
  std::vector<double> h(size, 0.0);
  for (std::size_t s : samples) {
    if (s >= size) throw Error(ErrorCode::IndexOutOfRange, "sample outside the histogram range");
    h[s] += 1.0;
  }
  for (auto& x : h) x /= static_cast<double>(samples.size());
  return h;
}

double chi_square_p_value(const std::vector<std::size_t>& observed, const std::vector<double>& expected) {
  if (observed.size() != expected.size()) throw Error(ErrorCode::DimensionMismatch, "count and probability sizes differ");
  double n = 0.0;
  for (std::size_t c : observed) n += static_cast<double>(c);
  if (n == 0.0) throw Error(ErrorCode::EmptyInput, "chi-square test of no samples");
  double statistic = 0.0;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i] * n;
    if (e <= 0.0) {
      if (observed[i] != 0) return 0.0;
      continue;
    }
    const double d = static_cast<double>(observed[i]) - e;
    statistic += d * d / e;
    ++cells;
  }
  return chi_square_survival(statistic, static_cast<double>(cells) - 1.0);
}

double chi_square_homogeneity_p_value(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "count vectors differ in size");
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]);
  }
  if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::EmptyInput, "chi-square test of no samples");
  double statistic = 0.0;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double total = static_cast<double>(a[i] + b[i]);
    if (total == 0.0) continue;
    const double ea = total * na / (na + nb);
    const double eb = total * nb / (na + nb);
    statistic += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
    ++cells;
  }
  return chi_square_survival(statistic, static_cast<double>(cells) - 1.0);
}

}  // namespace vboe::stats
