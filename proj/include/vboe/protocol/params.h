#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vboe::protocol {

// Security parameterization. w is the allowed fraction of failed test
// rounds; k the number of colour classes used for traps.
struct ProtocolParams {
  std::size_t n_c = 1;
  std::size_t n_t = 1;
  double w = 0.0;
  double epsilon = 0.1;
  std::size_t k = 1;
  // Slack constants of the security bound; only needed when it is evaluated.
  std::optional<double> gamma1;
  std::optional<double> gamma2;

  friend bool operator==(const ProtocolParams&, const ProtocolParams&) = default;
};

// Empty when valid. Checks N_c, N_t >= 1, w in [0, 1), epsilon > 0, k >= 1,
// 0 <= k w < epsilon and, when both gammas are present, gamma > 0 and
// gamma1 + k w + gamma2 < epsilon.
inline std::vector<std::string> validate_params(const ProtocolParams& p) {
  std::vector<std::string> out;
  if (p.n_c < 1) out.push_back("N_c must be at least 1");
  if (p.n_t < 1) out.push_back("N_t must be at least 1");
  if (!(p.w >= 0.0 && p.w < 1.0)) out.push_back("w must lie in [0, 1)");
  if (!(p.epsilon > 0.0)) out.push_back("epsilon must be positive");
  if (p.k < 1) out.push_back("k must be at least 1");
  const double kw = static_cast<double>(p.k) * p.w;
  if (!(kw < p.epsilon)) out.push_back("k*w = " + std::to_string(kw) + " is not below epsilon");
  if (p.gamma1.has_value() != p.gamma2.has_value()) out.push_back("gamma1 and gamma2 must be given together");
  if (p.gamma1 && p.gamma2) {
    if (!(*p.gamma1 > 0.0) || !(*p.gamma2 > 0.0)) out.push_back("gamma1 and gamma2 must be positive");
    if (!(*p.gamma1 + kw + *p.gamma2 < p.epsilon)) out.push_back("gamma1 + k*w + gamma2 is not below epsilon");
  }
  return out;
}

}  // namespace vboe::protocol
