#include "vboe/stats/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace vboe::stats {

namespace {

// Integers below this are compared exactly in double arithmetic; the slack
// only absorbs rounding in n*p for non-dyadic p.
bool on_side(double mean, double k, Tail tail) {
  const double slack = 1e-9 * std::max(1.0, std::abs(mean));
  return tail == Tail::Lower ? k <= mean + slack : k >= mean - slack;
}

void check_hypergeometric(std::size_t N, std::size_t K, std::size_t n) {
  if (K > N || n > N) {
    throw Error(ErrorCode::BadParams, "hypergeometric parameters need K <= N and n <= N (N=" + std::to_string(N) +
                                          ", K=" + std::to_string(K) + ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

const char* to_string(Tail tail) { return tail == Tail::Lower ? "lower" : "upper"; }

double hoeffding_mean_bound(double epsilon, std::size_t n) {
  if (!(epsilon > 0.0) || n < 1) throw Error(ErrorCode::BadParams, "Hoeffding bound needs epsilon > 0 and N >= 1");
  return 2.0 * std::exp(-2.0 * epsilon * epsilon * static_cast<double>(n));
}

double binomial_tail_bound(std::size_t n, double p, double k, Tail tail) {
  if (n < 1 || !(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadParams, "binomial bound needs n >= 1, p in [0, 1]");
  const double mean = static_cast<double>(n) * p;
  if (!on_side(mean, k, tail)) {
    throw Error(ErrorCode::DirectionMismatch, std::string(to_string(tail)) + " tail needs k on the " +
                                                  (tail == Tail::Lower ? "low" : "high") + " side of np");
  }
  const double gap = mean - k;
  return std::exp(-2.0 * gap * gap / static_cast<double>(n));
}

double hypergeometric_tail_bound(std::size_t N, std::size_t K, std::size_t n, double lambda, Tail tail) {
  check_hypergeometric(N, K, n);
  if (n == 0) return 1.0;
  const double nd = static_cast<double>(n);
  const double mean = nd * static_cast<double>(K) / static_cast<double>(N);
  if (!on_side(mean, lambda, tail)) {
    throw Error(ErrorCode::DirectionMismatch, std::string(to_string(tail)) + " tail needs lambda on the " +
                                                  (tail == Tail::Lower ? "low" : "high") + " side of nK/N");
  }
  const double gap = static_cast<double>(K) / static_cast<double>(N) - lambda / nd;
  return std::exp(-2.0 * nd * gap * gap);
}

BigInt binomial_coefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational hypergeometric_pmf_exact(std::size_t N, std::size_t K, std::size_t n, std::size_t k) {
  check_hypergeometric(N, K, n);
  if (k > K || k > n || n - k > N - K) return 0;
  return Rational(binomial_coefficient(K, k) * binomial_coefficient(N - K, n - k), binomial_coefficient(N, n));
}

double exact_hypergeometric_pmf(std::size_t N, std::size_t K, std::size_t n, std::size_t k) {
  return static_cast<double>(hypergeometric_pmf_exact(N, K, n, k));
}

Rational hypergeometric_tail_exact(std::size_t N, std::size_t K, std::size_t n, double lambda, Tail tail) {
  check_hypergeometric(N, K, n);
  Rational total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    if (tail == Tail::Lower ? kd <= lambda : kd >= lambda) total += hypergeometric_pmf_exact(N, K, n, k);
  }
  return total;
}

Rational binomial_pmf_exact(std::size_t n, const Rational& p, std::size_t k) {
  if (k > n) return 0;
  Rational q = 1 - p;
  Rational result = Rational(binomial_coefficient(n, k));
  for (std::size_t i = 0; i < k; ++i) result *= p;
  for (std::size_t i = 0; i < n - k; ++i) result *= q;
  return result;
}

Rational binomial_tail_exact(std::size_t n, const Rational& p, double k, Tail tail) {
  Rational total = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double jd = static_cast<double>(j);
    if (tail == Tail::Lower ? jd <= k : jd >= k) total += binomial_pmf_exact(n, p, j);
  }
  return total;
}

BoundReport security_failure_bound(const protocol::ProtocolParams& params) {
  if (!params.gamma1 || !params.gamma2) {
    throw Error(ErrorCode::InvalidParams, "security bound needs gamma1 and gamma2");
  }
  const auto violations = protocol::validate_params(params);
  if (!violations.empty()) throw Error(ErrorCode::InvalidParams, violations.front());

  const double nc = static_cast<double>(params.n_c);
  const double nt = static_cast<double>(params.n_t);
  const double k = static_cast<double>(params.k);
  const double kw = k * params.w;
  const double g1 = *params.gamma1;
  const double g2 = *params.gamma2;
  const auto clamp = [](double x) { return std::clamp(x, 0.0, 1.0); };

  BoundReport r;
  r.m0 = (kw + g2 / 2.0) * (nc + nt);
  r.gamma1_term = clamp(2.0 * std::exp(-2.0 * g1 * g1 * nc));
  // exp(-2 N_c ((kw + gamma2) - m/N)^2) grows with m while m/N < kw + gamma2,
  // so over m <= m0 the maximum sits at m0.
  const double gap = (kw + g2) - r.m0 / (nc + nt);
  r.boundz_term = clamp(std::exp(-2.0 * nc * gap * gap));
  r.boundy_term_test = clamp(std::exp(-nt * g2 * g2 / 2.0));
  r.boundy_term_binom = clamp(std::exp(-(g2 * g2 / (8.0 * k * k)) * nc / (kw + g2 / 4.0)));
  r.total = clamp(r.gamma1_term + r.boundz_term + r.boundy_term_test + r.boundy_term_binom);
  return r;
}

}  // namespace vboe::stats

namespace vboe::stats {

namespace {

// tail = numerator / denominator; true iff tail <= bound exactly.
bool dominated(const BigInt& numerator, const BigInt& denominator, double bound) {
  const double approx = static_cast<double>(Rational(numerator, denominator));
  if (approx < bound * (1.0 - 1e-12)) return true;
  if (approx > bound * (1.0 + 1e-12)) return false;
  return Rational(numerator, denominator) <= Rational(bound);
}

void record(DominationReport& report, const BigInt& numerator, const BigInt& denominator, double bound) {
  ++report.checked;
  if (!dominated(numerator, denominator, bound)) ++report.violations;
  if (bound > 0.0) {
    report.max_ratio = std::max(report.max_ratio, static_cast<double>(Rational(numerator, denominator)) / bound);
  }
}

}  // namespace

DominationReport hypergeometric_domination_sweep(std::size_t max_n) {
  DominationReport report;
  for (std::size_t N = 1; N <= max_n; ++N) {
    std::vector<BigInt> choose(N + 1);
    for (std::size_t i = 0; i <= N; ++i) choose[i] = binomial_coefficient(N, i);
    for (std::size_t K = 0; K <= N; ++K) {
      for (std::size_t n = 1; n <= N; ++n) {
        // Numerators of Pr[X = k] over the common denominator C(N, n).
        std::vector<BigInt> mass(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
          mass[k] = (k <= K && n - k <= N - K) ? binomial_coefficient(K, k) * binomial_coefficient(N - K, n - k) : 0;
        }
        BigInt below = 0;
        BigInt total = 0;
        for (const auto& m : mass) total += m;
        for (std::size_t k = 0; k <= n; ++k) {
          const BigInt at_least = total - below;  // Pr[X >= k]
          below += mass[k];                      // Pr[X <= k]
          // Valid sides compared exactly: k N vs n K.
          if (k * N <= n * K) {
            record(report, below, choose[n], hypergeometric_tail_bound(N, K, n, static_cast<double>(k), Tail::Lower));
          }
          if (k * N >= n * K) {
            record(report, at_least, choose[n],
                   hypergeometric_tail_bound(N, K, n, static_cast<double>(k), Tail::Upper));
          }
        }
      }
    }
  }
  return report;
}

DominationReport binomial_domination_sweep(std::size_t max_n) {
  DominationReport report;
  for (std::size_t n = 1; n <= max_n; ++n) {
    BigInt denominator = 1;
    for (std::size_t i = 0; i < n; ++i) denominator *= 10;
    for (std::size_t j = 1; j <= 9; ++j) {
      std::vector<BigInt> mass(n + 1);
      BigInt total = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        BigInt m = binomial_coefficient(n, k);
        for (std::size_t i = 0; i < k; ++i) m *= j;
        for (std::size_t i = 0; i < n - k; ++i) m *= 10 - j;
        mass[k] = m;
        total += m;
      }
      const double p = static_cast<double>(j) / 10.0;
      BigInt below = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        const BigInt at_least = total - below;
        below += mass[k];
        // np = n j / 10 compared exactly.
        if (10 * k <= n * j) {
          record(report, below, denominator, binomial_tail_bound(n, p, static_cast<double>(k), Tail::Lower));
        }
        if (10 * k >= n * j) {
          record(report, at_least, denominator, binomial_tail_bound(n, p, static_cast<double>(k), Tail::Upper));
        }
      }
    }
  }
  return report;
}

}  // namespace vboe::stats
