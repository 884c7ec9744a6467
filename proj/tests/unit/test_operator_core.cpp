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

TEST(EigHermitian, DiagonalInputSortsEigenvalues) {
  const auto sd = eig_hermitian(diag({2, 0, 1}));
  EXPECT_NEAR(sd.eigenvalues(0), 0.0, 1e-15);
  EXPECT_NEAR(sd.eigenvalues(1), 1.0, 1e-15);
  EXPECT_NEAR(sd.eigenvalues(2), 2.0, 1e-15);
  // eigenvectors are standard basis vectors e_1, e_2, e_0
  const ComplexMatrix expected = (ComplexMatrix(3, 3) << 0, 0, 1, 1, 0, 0, 0, 1, 0).finished();
  EXPECT_LT((sd.eigenvectors - expected).norm(), 1e-14);
}

TEST(EigHermitian, PauliX) {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const auto sd = eig_hermitian(x);
  EXPECT_NEAR(sd.eigenvalues(0), -1.0, 1e-15);
  EXPECT_NEAR(sd.eigenvalues(1), 1.0, 1e-15);
}

TEST(EigHermitian, RandomReconstructionAndOrthonormality) {
  Rng rng = substream(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix g = ginibre(8, 8, rng);
    const ComplexMatrix a = 0.5 * (g + g.adjoint());
    const auto sd = eig_hermitian(a);
    EXPECT_LE((sd.reconstruct() - a).norm(), 1e-10 * std::max(1.0, a.norm()));
    EXPECT_LE((sd.eigenvectors.adjoint() * sd.eigenvectors - identity(8)).norm(), 1e-10);
    for (Eigen::Index k = 1; k < 8; ++k) EXPECT_LE(sd.eigenvalues(k - 1), sd.eigenvalues(k));
  }
}

TEST(EigHermitian, Errors) {
  ComplexMatrix rect(2, 3);
  rect.setZero();
  EXPECT_THROW(eig_hermitian(rect), Error);
  ComplexMatrix nh(2, 2);
  nh << 0, 1, 0, 0;
  try {
    eig_hermitian(nh);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
  ComplexMatrix nan = ComplexMatrix::Zero(2, 2);
  nan(0, 0) = std::nan("");
  EXPECT_THROW(eig_hermitian(nan), Error);
  EXPECT_THROW(eig_hermitian(ComplexMatrix(0, 0)), Error);
}

TEST(EigHermitian, DeterministicPhaseConvention) {
  Rng rng = substream(3, 1);
  const ComplexMatrix g = ginibre(5, 5, rng);
  const ComplexMatrix a = g + g.adjoint();
  const auto sd1 = eig_hermitian(a);
  const auto sd2 = eig_hermitian(a);
  EXPECT_EQ(sd1.eigenvectors, sd2.eigenvectors);
  for (Eigen::Index k = 0; k < 5; ++k) {
    Eigen::Index idx;
    sd1.eigenvectors.col(k).cwiseAbs().maxCoeff(&idx);
    EXPECT_NEAR(sd1.eigenvectors(idx, k).imag(), 0.0, 1e-15);
    EXPECT_GT(sd1.eigenvectors(idx, k).real(), 0.0);
  }
}

TEST(MatrixFunction, IdentityMapReturnsInput) {
  Rng rng = substream(5, 0);
  const ComplexMatrix g = ginibre(6, 6, rng);
  const ComplexMatrix a = g + g.adjoint();
  const ComplexMatrix out = matrix_function(a, [](double x) { return Complex(x); }, Clamp::No);
  EXPECT_LT((out - a).norm(), 1e-10);
}

TEST(MatrixFunction, SqrtOfDiagonal) {
  const ComplexMatrix out = matrix_function(diag({4, 9}), [](double x) { return Complex(std::sqrt(x)); });
  EXPECT_LT((out - diag({2, 3})).norm(), 1e-14);
}

TEST(MatrixFunction, ScalarExponential) {
  const double t = kPi;
  const ComplexMatrix u =
      matrix_function(diag({0, 1}), [t](double x) { return std::exp(Complex(0.0, -x * t)); }, Clamp::No);
  EXPECT_LT((u - diag({1, -1})).norm(), 1e-14);
  const auto sd = eig_hermitian(diag({0, 1}));
  EXPECT_LT((unitary_evolution(sd, t) - diag({1, -1})).norm(), 1e-14);
}

TEST(MatrixFunction, UndefinedValueIsDomainError) {
  try {
    matrix_function(diag({-1, 1}), [](double x) { return Complex(std::log(x)); });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
}

TEST(MatrixFunction, ClampSendsTinyEigenvaluesToZero) {
  // -1e-15 would give NaN under sqrt without the clamp.
  const ComplexMatrix out = matrix_function(diag({-1e-15, 1}), [](double x) { return Complex(std::sqrt(x)); });
  EXPECT_EQ(out(0, 0), Complex(0.0));
  EXPECT_THROW(matrix_function(diag({-1e-15, 1}), [](double x) { return Complex(std::sqrt(x)); }, Clamp::No), Error);
}

TEST(SupportPower, ZeroPowerIsSupportProjector) {
  const auto sd = eig_hermitian(diag({0.25, 0.0, 0.75}));
  EXPECT_LT((support_power(sd, 0.0) - diag({1, 0, 1})).norm(), 1e-14);
  EXPECT_LT((support_power(sd, -1.0) - diag({4, 0, 4.0 / 3.0})).norm(), 1e-12);
  EXPECT_LT((sqrt_psd(sd) - diag({0.5, 0, std::sqrt(0.75)})).norm(), 1e-14);
}

TEST(TraceNorm, Examples) {
  EXPECT_EQ(trace_norm(ComplexMatrix::Zero(3, 3)), 0.0);
  ComplexMatrix a(2, 2);
  a << 0, -0.5, 0.5, 0;
  EXPECT_NEAR(trace_norm(a), 1.0, 1e-15);
  EXPECT_NEAR(trace_norm(diag({1, -2, 3})), 6.0, 1e-14);
}

TEST(TraceNorm, MatchesSvdOnRandomMatrices) {
  Rng rng = substream(9, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix g = ginibre(5, 5, rng);
    EXPECT_NEAR(trace_norm(g), testing::svd_trace_norm(g), 1e-12);
    const ComplexMatrix h = g + g.adjoint();
    EXPECT_NEAR(trace_norm(h), testing::svd_trace_norm(h), 1e-12);
  }
}

TEST(TraceNorm, RejectsNonFinite) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(1, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(trace_norm(a), Error);
}

TEST(Commutator, Examples) {
  Rng rng = substream(1, 0);
  const ComplexMatrix a = ginibre(4, 4, rng);
  EXPECT_LT(commutator(a, a).norm(), 1e-14);
  ComplexMatrix p(2, 2);
  p << 0.5, 0.5, 0.5, 0.5;
  ComplexMatrix expected(2, 2);
  expected << 0, -0.5, 0.5, 0;
  EXPECT_LT((commutator(diag({0, 1}), p) - expected).norm(), 1e-15);
  EXPECT_EQ(commutator(diag({1, 2, 3}), diag({4, 5, 6})).norm(), 0.0);
  EXPECT_THROW(commutator(a, ComplexMatrix::Zero(3, 3)), Error);
}

TEST(Kron, ShapeAndEntries) {
  const ComplexMatrix k = kron(diag({1, 2}), diag({3, 5, 7}));
  EXPECT_EQ(k.rows(), 6);
  EXPECT_LT((k - diag({3, 5, 7, 6, 10, 14})).norm(), 1e-15);
}

}  // namespace
}  // namespace qsl
