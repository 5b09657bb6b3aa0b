#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>

#include "vboe/protocol/params.h"
#include "vboe/types.h"

namespace vboe::stats {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Tail { Lower, Upper };

const char* to_string(Tail tail);

// 2 exp(-2 eps^2 N). Throws BadParams unless eps > 0 and N >= 1.
double hoeffding_mean_bound(double epsilon, std::size_t n);

// exp(-2 (np - k)^2 / n) for Pr[X <= k] (k <= np) or Pr[X >= k] (k >= np),
// X ~ Bin(n, p). Throws DirectionMismatch when k is on the wrong side of np
// and BadParams for n = 0 or p outside [0, 1].
double binomial_tail_bound(std::size_t n, double p, double k, Tail tail);

// exp(-2 n (K/N - lambda/n)^2) for Pr[X <= lambda] (lambda <= nK/N) or
// Pr[X >= lambda] (lambda >= nK/N), X ~ Hypergeometric(N, K, n). Returns 1
// for n = 0. Throws BadParams unless n, K <= N and DirectionMismatch on the
// wrong side of the mean.
double hypergeometric_tail_bound(std::size_t N, std::size_t K, std::size_t n, double lambda, Tail tail);

BigInt binomial_coefficient(std::size_t n, std::size_t k);

// C(K,k) C(N-K,n-k) / C(N,n); zero outside the support. Throws BadParams
// unless n, K <= N.
Rational hypergeometric_pmf_exact(std::size_t N, std::size_t K, std::size_t n, std::size_t k);
double exact_hypergeometric_pmf(std::size_t N, std::size_t K, std::size_t n, std::size_t k);

// Exact Pr[X <= lambda] or Pr[X >= lambda].
Rational hypergeometric_tail_exact(std::size_t N, std::size_t K, std::size_t n, double lambda, Tail tail);

// Exact binomial PMF and tails for a rational success probability.
Rational binomial_pmf_exact(std::size_t n, const Rational& p, std::size_t k);
Rational binomial_tail_exact(std::size_t n, const Rational& p, double k, Tail tail);

// Quantities of the security argument for one attack: m attacked rounds,
// Z of them computation rounds, X test rounds, Y failed tests.
struct AttackTally {
  std::size_t m = 0;
  std::size_t z = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  double m0 = 0.0;
};

// Terms of the union bound on Pr[accept and |estimate - p| >= eps].
struct BoundReport {
  double m0 = 0.0;  // (kw + gamma2/2)(N_c + N_t)
  double gamma1_term = 0.0;
  double boundz_term = 0.0;
  double boundy_term_test = 0.0;
  double boundy_term_binom = 0.0;
  double total = 0.0;  // sum of the terms, clamped to [0, 1]
};

// Throws InvalidParams unless the params validate with both gammas set.
BoundReport security_failure_bound(const protocol::ProtocolParams& params);

}  // namespace vboe::stats

namespace vboe::stats {

struct DominationReport {
  std::size_t checked = 0;     // (parameters, lambda, tail) cases compared
  std::size_t violations = 0;  // exact tail above the bound
  double max_ratio = 0.0;      // largest exact tail / bound seen
};

// Every N <= max_n, K <= N, n in [1, N], integer lambda in [0, n] and each
// tail for which lambda is on the valid side: exact tail vs bound. The
// comparison is exact against the bound's double value.
DominationReport hypergeometric_domination_sweep(std::size_t max_n);

// Every n in [1, max_n], p = j/10 for j = 1..9, integer k in [0, n], each
// valid tail.
DominationReport binomial_domination_sweep(std::size_t max_n);

}  // namespace vboe::stats
