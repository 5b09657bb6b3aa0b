#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "vboe/quantum/density_matrix.h"
#include "vboe/quantum/quantum_memory.h"
#include "vboe/quantum/state_vector.h"

namespace vboe::quantum {
namespace {

constexpr double kH = 0.70710678118654752440;

void expect_amps(const StateVector& s, const std::vector<Amplitude>& want) {
  ASSERT_EQ(s.dimension(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(std::abs(s[i] - want[i]), 0.0, 1e-12) << "index " << i;
  }
}

StateVector plus(int theta) { return prepare_qubit(QubitPreparation::plus(Angle(theta))); }

TEST(AngleTest, WrapsModEight) {
  EXPECT_EQ(Angle(9).units(), 1);
  EXPECT_EQ(Angle(-1).units(), 7);
  EXPECT_EQ((-Angle(1)).units(), 7);
  EXPECT_EQ((Angle(6) + Angle(5)).units(), 3);
  EXPECT_EQ(Angle::pi().units(), 4);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(-(-Angle(k)), Angle(k));
}

TEST(PrepareQubitTest, Examples) {
  expect_amps(plus(0), {kH, kH});
  expect_amps(prepare_qubit(QubitPreparation::computational(1)), {0.0, 1.0});
  expect_amps(prepare_qubit(QubitPreparation::computational(0)), {1.0, 0.0});
  expect_amps(plus(4), {kH, -kH});
  expect_amps(plus(2), {kH, Amplitude(0, kH)});
}

TEST(StateVectorTest, RejectsBadConstruction) {
  EXPECT_THROW(StateVector(2, {1.0, 0.0}), Error);
  EXPECT_THROW(StateVector(1, {1.0, 1.0}), Error);
  EXPECT_NO_THROW(StateVector(1, {0.0, 1.0}));
}

TEST(ApplyCzTest, Examples) {
  const StateVector pp = plus(0).tensor(plus(0));
  expect_amps(apply_cz(pp, 0, 1), {0.5, 0.5, 0.5, -0.5});
  expect_amps(apply_cz(apply_cz(pp, 0, 1), 0, 1), {0.5, 0.5, 0.5, 0.5});
  expect_amps(apply_cz(StateVector(2), 0, 1), {1.0, 0.0, 0.0, 0.0});
}

TEST(ApplyCzTest, Errors) {
  StateVector s(2);
  try {
    s.apply_cz(0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EqualIndices);
  }
  try {
    s.apply_cz(0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(ApplyRzTest, Examples) {
  const StateVector s = plus(3).tensor(plus(5));
  expect_amps(apply_rz(s, 1, Angle(0)), std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end()));
  expect_amps(apply_rz(plus(0), 0, Angle(2)), {kH, Amplitude(0, kH)});
  for (int t = 0; t < 8; ++t) {
    const StateVector back = apply_rz(apply_rz(s, 0, Angle(t)), 0, -Angle(t));
    expect_amps(back, std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end()));
  }
  EXPECT_THROW(apply_rz(s, 2, Angle(1)), Error);
}

TEST(MeasureRotatedTest, EigenstatesAreDeterministic) {
  Rng rng(7);
  for (int t = 0; t < 8; ++t) {
    for (int i = 0; i < 20; ++i) {
      EXPECT_EQ(measure_rotated(plus(t), 0, Angle(t), rng).outcome, 0);
      EXPECT_EQ(measure_rotated(plus(t), 0, Angle(t + 4), rng).outcome, 1);
    }
  }
}

TEST(MeasureRotatedTest, ExactProbabilities) {
  for (int t = 0; t < 8; ++t) {
    for (int d = 0; d < 8; ++d) {
      const double expected = std::pow(std::sin((t - d) * std::numbers::pi / 8.0), 2);
      EXPECT_NEAR(plus(t).rotated_one_probability(0, Angle(d)), expected, 1e-12);
    }
  }
  EXPECT_NEAR(plus(0).rotated_one_probability(0, Angle(2)), 0.5, 1e-12);
}

TEST(MeasureRotatedTest, RemovesQubitAndKeepsNorm) {
  Rng rng(3);
  StateVector s = apply_cz(plus(1).tensor(plus(2)).tensor(plus(7)), 0, 2);
  s.apply_cz(1, 2);
  const auto m = measure_rotated(s, 1, Angle(3), rng);
  EXPECT_EQ(m.state.num_qubits(), 2u);
  EXPECT_NEAR(m.state.norm(), 1.0, 1e-9);
  EXPECT_THROW(measure_rotated(s, 3, Angle(0), rng), Error);
}

TEST(MeasureRotatedTest, StatisticsMatchForAllPairs) {
  constexpr int kTrials = 100000;
  for (int t = 0; t < 8; ++t) {
    for (int d = 0; d < 8; ++d) {
      Rng rng(derive_seed(11, {static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(d)}));
      const StateVector s = plus(t);
      int ones = 0;
      for (int i = 0; i < kTrials; ++i) ones += measure_rotated(s, 0, Angle(d), rng).outcome;
      const double p = std::pow(std::sin((t - d) * std::numbers::pi / 8.0), 2);
      const double se = std::sqrt(p * (1 - p) / kTrials);
      EXPECT_LE(std::abs(ones / double(kTrials) - p), 3 * se + 1e-12) << "theta=" << t << " delta=" << d;
    }
  }
}

TEST(StateVectorTest, CzOrderIsIrrelevant) {
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}};
  StateVector base = plus(1).tensor(plus(2)).tensor(plus(5)).tensor(plus(7));
  std::vector<int> perm = {0, 1, 2, 3, 4};
  StateVector reference = base;
  for (auto [a, b] : edges) reference.apply_cz(a, b);
  while (std::next_permutation(perm.begin(), perm.end())) {
    StateVector s = base;
    for (int i : perm) s.apply_cz(edges[i].first, edges[i].second);
    for (std::size_t k = 0; k < s.dimension(); ++k) ASSERT_NEAR(std::abs(s[k] - reference[k]), 0.0, 1e-9);
  }
}

TEST(StateVectorTest, GatesPreserveNorm) {
  Rng rng(5);
  StateVector s = plus(1).tensor(plus(3)).tensor(plus(6));
  for (int i = 0; i < 200; ++i) {
    const std::size_t a = rng.below(3);
    const std::size_t b = (a + 1 + rng.below(2)) % 3;
    switch (rng.below(4)) {
      case 0: s.apply_cz(a, b); break;
      case 1: s.apply_rz(a, rng.angle()); break;
      case 2: s.apply_h(a); break;
      default: s.apply_cnot(a, b); break;
    }
    ASSERT_NEAR(s.norm(), 1.0, 1e-9);
  }
}

TEST(PauliTest, ParseAndApply) {
  EXPECT_EQ(parse_pauli('Y'), Pauli::Y);
  EXPECT_THROW(parse_pauli('Q'), Error);
  StateVector s = prepare_qubit(QubitPreparation::computational(0));
  apply_pauli(s, 0, Pauli::Y);
  expect_amps(s, {0.0, -1.0});
  StateVector p = plus(0);
  apply_pauli(p, 0, Pauli::Z);
  expect_amps(p, {kH, -kH});
}

TEST(AverageDensityTest, Examples) {
  const StateVector zero = prepare_qubit(QubitPreparation::computational(0));
  const StateVector one = prepare_qubit(QubitPreparation::computational(1));
  std::vector<WeightedState> pure = {{1.0, zero}};
  EXPECT_NEAR(average_density(pure).max_abs_difference(DensityMatrix::pure(zero)), 0.0, 1e-12);

  std::vector<WeightedState> mixed = {{0.5, zero}, {0.5, one}};
  EXPECT_NEAR(average_density(mixed).max_abs_difference(DensityMatrix::maximally_mixed(1)), 0.0, 1e-12);

  std::vector<WeightedState> theta;
  for (int t = 0; t < 8; ++t) theta.push_back({1.0 / 8, plus(t)});
  const DensityMatrix rho = average_density(theta);
  EXPECT_LE(rho.max_abs_difference(DensityMatrix::maximally_mixed(1)), 1e-9);
  EXPECT_GE(rho.min_eigenvalue(), -1e-9);
}

TEST(AverageDensityTest, Errors) {
  const StateVector zero(1);
  const StateVector two(2);
  std::vector<WeightedState> bad_dim = {{0.5, zero}, {0.5, two}};
  try {
    average_density(bad_dim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  std::vector<WeightedState> bad_sum = {{0.5, zero}, {0.4, zero}};
  try {
    average_density(bad_sum);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadDistribution);
  }
  std::vector<WeightedState> negative = {{1.5, zero}, {-0.5, zero}};
  EXPECT_THROW(average_density(negative), Error);
}

TEST(DensityMatrixTest, ValidatesInvariants) {
  DensityMatrix::Matrix m(2, 2);
  m << 0.5, 0.1, 0.2, 0.5;
  EXPECT_THROW(DensityMatrix(1, m), Error);
  m << 1.5, 0.0, 0.0, -0.5;
  EXPECT_THROW(DensityMatrix(1, m), Error);
  m << 0.6, 0.0, 0.0, 0.6;
  EXPECT_THROW(DensityMatrix(1, m), Error);
}

TEST(QuantumMemoryTest, IdsStayStableAcrossMeasurement) {
  auto memory = std::make_shared<QuantumMemory>();
  const QubitId a = memory->allocate_qubit(plus(0));
  const QubitId b = memory->allocate_qubit(prepare_qubit(QubitPreparation::computational(1)));
  const QubitId c = memory->allocate_qubit(plus(4));
  Rng rng(1);
  EXPECT_EQ(memory->measure_rotated(a, Angle(0), rng), 0);
  EXPECT_FALSE(memory->contains(a));
  EXPECT_EQ(memory->position(b), 0u);
  EXPECT_EQ(memory->measure_rotated(c, Angle(0), rng), 1);
  EXPECT_EQ(memory->measure_computational(b, rng), 1);
  EXPECT_EQ(memory->size(), 0u);
  EXPECT_THROW(memory->position(b), Error);
}

TEST(RngTest, DerivedSeedsAreDistinctAndStable) {
  EXPECT_EQ(derive_seed(1, {2, 3}), derive_seed(1, {2, 3}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
  EXPECT_NE(derive_seed(1, {2}), derive_seed(2, {2}));
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(7), 7u);
}

}  // namespace
}  // namespace vboe::quantum
