#include "vboe/ubqc/blindness.h"

#include <algorithm>
#include <cmath>

#include "vboe/ubqc/secrets.h"
#include "vboe/ubqc/ubqc.h"

namespace vboe::ubqc {

namespace {

constexpr std::size_t kMaxAuditVertices = 3;

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

ServerView server_view(const mbqc::MeasurementPattern& pattern) {
  const auto& vertices = pattern.graph().vertices();
  const std::size_t n = vertices.size();
  if (n > kMaxAuditVertices) {
    throw Error(ErrorCode::InvalidPattern, "exact audit supports at most 3 vertices");
  }
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t tuples = power(Angle::kCount, n);
  const auto& inputs = pattern.inputs();

  // Product state densities for every theta tuple.
  std::vector<Eigen::MatrixXcd> rho(tuples);
  for (std::size_t t = 0; t < tuples; ++t) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(dim));
    std::size_t digits = t;
    for (std::size_t i = 0; i < n; ++i) {
      const Angle theta(static_cast<int>(digits % Angle::kCount));
      digits /= Angle::kCount;
      for (std::size_t k = 0; k < dim; ++k) {
        psi[static_cast<Eigen::Index>(k)] *= (k >> i & 1u) ? quantum::phase(theta) : 1.0;
      }
    }
    psi /= std::sqrt(static_cast<double>(dim));
    rho[t] = psi * psi.adjoint();
  }

  ServerView view;
  view.num_vertices = n;
  view.by_answers.assign(dim, std::vector<Eigen::MatrixXcd>(
                                  tuples, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                                 static_cast<Eigen::Index>(dim))));
  const double weight = 1.0 / static_cast<double>(tuples * dim * (std::size_t{1} << inputs.size()));

  for (std::size_t answers = 0; answers < dim; ++answers) {
    std::map<Vertex, Bit> b;
    for (std::size_t i = 0; i < n; ++i) b[vertices[i]] = (answers >> i) & 1u;
    for (std::size_t a_mask = 0; a_mask < (std::size_t{1} << inputs.size()); ++a_mask) {
      BlindingSecrets s;
      for (Vertex v : vertices) s.a_init[v] = 0;
      for (std::size_t i = 0; i < inputs.size(); ++i) s.a_init[inputs[i]] = (a_mask >> i) & 1u;
      s.a_prop = propagate_a_init(pattern.graph(), s.a_init);
      for (std::size_t r_mask = 0; r_mask < dim; ++r_mask) {
        for (std::size_t i = 0; i < n; ++i) s.r[vertices[i]] = (r_mask >> i) & 1u;
        // phi' depends only on (b, r), not on theta.
        std::map<Vertex, Angle> phi_prime;
        for (Vertex v : pattern.order()) phi_prime[v] = corrected_angle(pattern, v, b, s.r);
        for (std::size_t t = 0; t < tuples; ++t) {
          std::size_t digits = t;
          std::size_t delta_index = 0;
          std::size_t scale = 1;
          for (std::size_t i = 0; i < n; ++i) {
            const Vertex v = vertices[i];
            s.theta[v] = Angle(static_cast<int>(digits % Angle::kCount));
            digits /= Angle::kCount;
            delta_index += scale * static_cast<std::size_t>(blind_angle(phi_prime[v], s, v).units());
            scale *= Angle::kCount;
          }
          view.by_answers[answers][delta_index] += weight * rho[t];
        }
      }
    }
  }
  return view;
}

BlindnessAudit audit_blindness(const mbqc::MeasurementPattern& a, const mbqc::MeasurementPattern& b) {
  if (!(a.graph() == b.graph()) || a.inputs() != b.inputs() || a.outputs() != b.outputs() ||
      a.flow().successor != b.flow().successor || a.order() != b.order()) {
    throw Error(ErrorCode::InvalidPattern, "blindness compares patterns with identical structure only");
  }
  const ServerView va = server_view(a);
  const ServerView vb = server_view(b);
  BlindnessAudit audit;
  const std::size_t dim = std::size_t{1} << va.num_vertices;
  const double uniform = 1.0 / static_cast<double>(va.by_answers.front().size());
  const Eigen::MatrixXcd mixed =
      Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)) /
      static_cast<double>(dim);
  for (std::size_t ans = 0; ans < va.by_answers.size(); ++ans) {
    for (std::size_t d = 0; d < va.by_answers[ans].size(); ++d) {
      for (const ServerView* view : {&va, &vb}) {
        const Eigen::MatrixXcd& m = view->by_answers[ans][d];
        const double p = m.trace().real();
        audit.max_delta_weight_error = std::max(audit.max_delta_weight_error, std::abs(p - uniform));
        if (p > 0) {
          audit.max_mixedness_error =
              std::max(audit.max_mixedness_error, (m / p - mixed).cwiseAbs().maxCoeff());
        }
      }
      audit.max_view_difference = std::max(
          audit.max_view_difference, (va.by_answers[ans][d] - vb.by_answers[ans][d]).cwiseAbs().maxCoeff());
    }
  }
  return audit;
}

}  // namespace vboe::ubqc
