// Copyright 2026 The qslasym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "helpers.hpp"

namespace qsl {
namespace {

using testing::diag;
using testing::kPi;
using testing::ket;

DensityMatrix evolved_plus(double t) {
  return DensityMatrix::pure(ket({1.0, std::exp(Complex(0.0, -t))}));
}

TEST(Measure, ParseAndPrint) {
  EXPECT_EQ(DistinguishabilityMeasure::parse("trace"), DistinguishabilityMeasure::trace());
  EXPECT_EQ(DistinguishabilityMeasure::parse("renyi"), DistinguishabilityMeasure::renyi(0.5));
  EXPECT_EQ(DistinguishabilityMeasure::parse("renyi:1.5"), DistinguishabilityMeasure::renyi(1.5));
  EXPECT_EQ(DistinguishabilityMeasure::parse("infidelity"), DistinguishabilityMeasure::infidelity());
  EXPECT_EQ(DistinguishabilityMeasure::parse("perp"), DistinguishabilityMeasure::perp());
  EXPECT_EQ(DistinguishabilityMeasure::renyi(0.25).to_string(), "renyi:0.25");
  EXPECT_THROW(DistinguishabilityMeasure::parse("bures"), Error);
  EXPECT_THROW(DistinguishabilityMeasure::parse("renyi:x"), Error);
}

TEST(Measure, RenyiOrderDomain) {
  EXPECT_TRUE(is_valid_renyi_order(0.5));
  EXPECT_TRUE(is_valid_renyi_order(2.0));
  EXPECT_FALSE(is_valid_renyi_order(1.0));
  EXPECT_FALSE(is_valid_renyi_order(0.0));
  EXPECT_FALSE(is_valid_renyi_order(2.5));
  EXPECT_FALSE(is_valid_renyi_order(std::nan("")));
  try {
    DistinguishabilityMeasure::renyi(1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidOrder);
  }
}

TEST(TraceDistance, Examples) {
  const auto p = testing::plus();
  EXPECT_EQ(trace_distance(p, p), 0.0);
  EXPECT_NEAR(trace_distance(p, testing::minus()), 2.0, 1e-14);
  for (double t : {0.1, 0.7, 1.3, 2.0, 3.0, 4.5, 6.0})
    EXPECT_NEAR(trace_distance(p, evolved_plus(t)), 2.0 * std::abs(std::sin(t / 2.0)), 1e-12) << t;
}

TEST(TraceDistance, ContractiveUnderChannels) {
  Rng rng = substream(21, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_density_matrix(3, rng);
    const auto b = random_density_matrix(3, rng);
    const auto ch = random_channel(3, 2, rng);
    EXPECT_LE(trace_distance(apply_channel(ch, a), apply_channel(ch, b)), trace_distance(a, b) + 1e-12);
  }
}

TEST(TraceDistance, DimensionMismatch) {
  EXPECT_THROW(trace_distance(testing::plus(), validate_state(diag({0.2, 0.3, 0.5}))), Error);
}

TEST(Renyi, SelfDivergenceIsZero) {
  Rng rng = substream(22, 0);
  const auto rho = random_density_matrix(4, rng);
  for (double s : {0.25, 0.5, 0.9, 1.5, 2.0}) EXPECT_NEAR(renyi_relative_entropy(rho, rho, s).value(), 0.0, 1e-12);
}

TEST(Renyi, QubitOrbitClosedForm) {
  const auto p = testing::plus();
  for (double t : {0.2, 1.0, 2.0, 3.0}) {
    const double expected = -2.0 * std::log(std::pow(std::cos(t / 2.0), 2));
    EXPECT_NEAR(renyi_relative_entropy(p, evolved_plus(t), 0.5).value(), expected, 1e-10) << t;
  }
}

TEST(Renyi, OrthogonalPureStatesAreInfinitelyFar) {
  EXPECT_TRUE(renyi_relative_entropy(testing::plus(), testing::minus(), 0.5).is_infinite());
  EXPECT_TRUE(renyi_relative_entropy(testing::plus(), testing::minus(), 1.5).is_infinite());
}

TEST(Renyi, SupportConditionForLargeOrders) {
  // supp(a) outside supp(b): infinite for s > 1, finite for s < 1
  const auto a = validate_state(diag({0.5, 0.5}));
  const auto b = validate_state(diag({1.0, 0.0}));
  EXPECT_TRUE(renyi_relative_entropy(a, b, 1.5).is_infinite());
  EXPECT_NEAR(renyi_relative_entropy(a, b, 0.5).value(), -2.0 * std::log(std::sqrt(0.5)), 1e-12);
  EXPECT_NEAR(renyi_relative_entropy(b, a, 1.5).value(), 2.0 * std::log(std::pow(0.5, -0.5)), 1e-12);
}

TEST(Renyi, CommutingStatesClassicalFormula) {
  Rng rng = substream(23, 0);
  const auto p = random_distribution(4, rng);
  const auto q = random_distribution(4, rng);
  const auto a = validate_state(diag({p[0], p[1], p[2], p[3]}));
  const auto b = validate_state(diag({q[0], q[1], q[2], q[3]}));
  for (double s : {0.3, 0.5, 1.2, 2.0}) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) sum += std::pow(p[i], s) * std::pow(q[i], 1.0 - s);
    EXPECT_NEAR(renyi_relative_entropy(a, b, s).value(), std::log(sum) / (s - 1.0), 1e-12) << s;
  }
}

TEST(Renyi, DataProcessingAndOrderMonotonicity) {
  Rng rng = substream(24, 0);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_density_matrix(3, rng);
    const auto b = random_density_matrix(3, rng);
    const auto ch = random_channel(3, 3, rng);
    double previous = 0.0;
    for (double s : {0.2, 0.5, 0.8, 1.3, 1.7, 2.0}) {
      const double d = renyi_relative_entropy(a, b, s).value();
      EXPECT_GE(d, previous - 1e-10);
      previous = d;
      EXPECT_LE(renyi_relative_entropy(apply_channel(ch, a), apply_channel(ch, b), s).value(), d + 1e-9);
    }
  }
}

TEST(Renyi, InvalidOrder) {
  const auto p = testing::plus();
  EXPECT_THROW(renyi_relative_entropy(p, p, 1.0), Error);
  EXPECT_THROW(renyi_relative_entropy(p, p, 3.0), Error);
}

TEST(Infidelity, Examples) {
  const auto p = testing::plus();
  EXPECT_NEAR(infidelity(p, p), 0.0, 1e-14);
  EXPECT_NEAR(infidelity(p, testing::minus()), 1.0, 1e-14);
  EXPECT_NEAR(infidelity(p, DensityMatrix::pure(ket({1, 0}))), 0.5, 1e-14);
}

TEST(Infidelity, PureStateOverlapOracle) {
  Rng rng = substream(25, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexVector u = random_vector(4, rng).normalized();
    const ComplexVector v = random_vector(4, rng).normalized();
    const double overlap = std::norm(u.dot(v));
    EXPECT_NEAR(fidelity(DensityMatrix::pure(u), DensityMatrix::pure(v)), overlap, 1e-10);
  }
}

TEST(PerfectDistinguishability, Examples) {
  const auto zero = DensityMatrix::pure(ket({1, 0}));
  const auto one = DensityMatrix::pure(ket({0, 1}));
  EXPECT_TRUE(is_perfectly_distinguishable(zero, one));
  EXPECT_FALSE(is_perfectly_distinguishable(zero, zero));
  EXPECT_FALSE(is_perfectly_distinguishable(testing::plus(), zero));
  EXPECT_NEAR(trace_distance(testing::plus(), zero), std::sqrt(2.0), 1e-14);
}

TEST(Distinguishability, Dispatch) {
  const auto p = testing::plus();
  const auto m = testing::minus();
  EXPECT_EQ(distinguishability(DistinguishabilityMeasure::perp(), p, m), ExtendedReal(1.0));
  EXPECT_EQ(distinguishability(DistinguishabilityMeasure::perp(), p, p), ExtendedReal(0.0));
  EXPECT_NEAR(distinguishability(DistinguishabilityMeasure::trace(), p, m).value(), 2.0, 1e-14);
  EXPECT_NEAR(distinguishability(DistinguishabilityMeasure::infidelity(), p, m).value(), 1.0, 1e-14);
  EXPECT_TRUE(distinguishability(DistinguishabilityMeasure::renyi(), p, m).is_infinite());
}

}  // namespace
}  // namespace qsl
