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
using testing::ket;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IOError;
}

TEST(QuantumChannel, Validation) {
  EXPECT_EQ(kind_of([] { QuantumChannel({diag({1, 0})}); }), ErrorKind::NotTracePreserving);
  EXPECT_EQ(kind_of([] { QuantumChannel({identity(2), identity(3)}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { QuantumChannel({identity(2)}, std::vector<double>{0.0, 1.0}); }),
            ErrorKind::DimensionMismatch);
  EXPECT_THROW(QuantumChannel(std::vector<ComplexMatrix>{}), Error);
}

TEST(ApplyChannel, Examples) {
  Rng rng = substream(51, 0);
  const auto rho = random_density_matrix(3, rng);
  EXPECT_LT((apply_channel(identity_channel(3), rho).matrix() - rho.matrix()).norm(), 1e-14);

  const auto dephased = apply_channel(dephasing_channel(testing::qubit_h()), testing::plus());
  EXPECT_LT((dephased.matrix() - 0.5 * identity(2)).norm(), 1e-15);

  const auto h = Hamiltonian::diagonal({0, 1, 2});
  const auto sigma = validate_state(diag({0.2, 0.5, 0.3}));
  const auto c = constant_channel(sigma, h);
  for (int trial = 0; trial < 5; ++trial)
    EXPECT_LT((apply_channel(c, random_density_matrix(3, rng)).matrix() - sigma.matrix()).norm(), 1e-13);
  EXPECT_THROW(apply_channel(identity_channel(2), rho), Error);
}

TEST(DephasingChannel, Examples) {
  const auto d = dephasing_channel(testing::qubit_h());
  ASSERT_EQ(d.kraus().size(), 2u);
  EXPECT_LT((d.kraus()[0] - diag({1, 0})).norm(), 1e-15);
  EXPECT_LT((d.kraus()[1] - diag({0, 1})).norm(), 1e-15);
  const auto flat = dephasing_channel(Hamiltonian(identity(3)));
  ASSERT_EQ(flat.kraus().size(), 1u);
  EXPECT_LT((flat.kraus()[0] - identity(3)).norm(), 1e-14);

  Rng rng = substream(52, 0);
  const auto h = random_hamiltonian(4, rng);
  const auto dh = dephasing_channel(h);
  for (int trial = 0; trial < 5; ++trial)
    EXPECT_TRUE(is_incoherent(apply_channel(dh, random_density_matrix(4, rng)), h));
}

TEST(ConstantChannel, Examples) {
  const auto h = Hamiltonian::diagonal({0, 1, 2});
  const auto ground = DensityMatrix::pure(ket({1, 0, 0}));
  const auto c = constant_channel(ground, h);
  Rng rng = substream(53, 0);
  EXPECT_LT((apply_channel(c, random_density_matrix(3, rng)).matrix() - ground.matrix()).norm(), 1e-14);
  EXPECT_LT(harmonic_residual(c, h), 1e-12);
  EXPECT_LT(verify_ti(c, h), 1e-12);
  EXPECT_EQ(kind_of([&] { constant_channel(DensityMatrix::pure(ket({1, 1, 0})), h); }),
            ErrorKind::NotIncoherentTarget);
}

TEST(ConstantChannel, DegenerateLevelTarget) {
  // coherence inside a degenerate level is allowed in the target
  const auto h = Hamiltonian::diagonal({0, 1, 1});
  const auto target = DensityMatrix::pure(ket({0, 1, 1}));
  const auto c = constant_channel(target, h);
  EXPECT_LT((apply_channel(c, validate_state(diag({1, 0, 0}))).matrix() - target.matrix()).norm(), 1e-13);
  EXPECT_LT(harmonic_residual(c, h), 1e-12);
}

TEST(Compose, FrequenciesAdd) {
  const auto h = Hamiltonian::diagonal({0, 1, 3});
  const auto sigma = validate_state(diag({0.6, 0.0, 0.4}));
  const auto c = compose(dephasing_channel(h), constant_channel(sigma, h));
  ASSERT_TRUE(c.omegas().has_value());
  EXPECT_LT(harmonic_residual(c, h), 1e-12);
  const auto uncertified = compose(unitary_channel(identity(3)), dephasing_channel(h));
  EXPECT_FALSE(uncertified.omegas().has_value());
}

TEST(RandomEnergyConservingUnitary, QubitBlockStructure) {
  const auto h = testing::qubit_h();
  const auto dil = random_energy_conserving_unitary(h, h, 17);
  EXPECT_EQ(dil.block_sizes, (std::vector<Eigen::Index>{1, 2, 1}));
  EXPECT_LT(unitarity_residual(dil.unitary), 1e-12);
  EXPECT_LT(energy_conservation_residual(dil, h), 1e-12);
  // |00> and |11> are isolated: only phases
  EXPECT_NEAR(std::abs(dil.unitary(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(dil.unitary(3, 3)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(dil.unitary(1, 0)), 0.0, 1e-15);
}

TEST(RandomEnergyConservingUnitary, DegenerateHamiltoniansGiveOneBlock) {
  const Hamiltonian flat(identity(2));
  const auto dil = random_energy_conserving_unitary(flat, flat, 5);
  EXPECT_EQ(dil.block_sizes, (std::vector<Eigen::Index>{4}));
}

TEST(RandomEnergyConservingUnitary, Deterministic) {
  Rng rng = substream(54, 0);
  const auto hs = random_integer_hamiltonian(3, rng);
  const auto he = random_integer_hamiltonian(3, rng);
  const auto a = random_energy_conserving_unitary(hs, he, 99);
  const auto b = random_energy_conserving_unitary(hs, he, 99);
  const auto c = random_energy_conserving_unitary(hs, he, 100);
  EXPECT_EQ(a.unitary, b.unitary);
  EXPECT_NE(a.unitary, c.unitary);
  EXPECT_THROW(random_energy_conserving_unitary(hs, he, 1, 3), Error);
}

TEST(DilationToChannel, IdentityUnitary) {
  const auto h = testing::qubit_h();
  StinespringDilation dil{h, identity(4), 0, {4}};
  const auto c = dilation_to_channel(dil, h);
  ASSERT_EQ(c.kraus().size(), 1u);
  EXPECT_LT((c.kraus()[0] - identity(2)).norm(), 1e-15);
  EXPECT_EQ((*c.omegas())[0], 0.0);
}

TEST(DilationToChannel, RandomDilationsAreCertifiedTI) {
  Rng rng = substream(55, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const auto hs = trial % 2 ? random_integer_hamiltonian(n, rng) : random_hamiltonian(n, rng);
    const auto he = random_integer_hamiltonian(n, rng);
    const auto dil = random_energy_conserving_unitary(hs, he, 1000 + trial, trial % n);
    const auto c = dilation_to_channel(dil, hs);
    EXPECT_LT(c.completeness_residual(), 1e-9);
    EXPECT_LT(harmonic_residual(c, hs, {0.1, 1.0, 7.3}), 1e-8);
    EXPECT_LT(verify_ti(c, hs), 1e-8);
    EXPECT_LT(verify_incoherent(c, hs), 1e-9);
  }
}

TEST(DilationToChannel, RejectsBrokenDilations) {
  const auto h = testing::qubit_h();
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  // swap conserves energy for equal Hamiltonians, but not against diag(0,2)
  EXPECT_NO_THROW(dilation_to_channel({h, swap, 0, {}}, h));
  EXPECT_EQ(kind_of([&] { dilation_to_channel({Hamiltonian::diagonal({0, 2}), swap, 0, {}}, h); }),
            ErrorKind::InvalidDilation);
  EXPECT_EQ(kind_of([&] { dilation_to_channel({h, 2.0 * identity(4), 0, {}}, h); }), ErrorKind::InvalidDilation);
  EXPECT_EQ(kind_of([&] { dilation_to_channel({h, identity(6), 0, {}}, h); }), ErrorKind::InvalidDilation);
  EXPECT_EQ(kind_of([&] { dilation_to_channel({h, identity(4), 2, {}}, h); }), ErrorKind::InvalidDilation);
}

TEST(VerifyTI, Examples) {
  const auto h = Hamiltonian::diagonal({0, 1, 3});
  EXPECT_LT(verify_ti(dephasing_channel(h), h), 1e-9);
  EXPECT_EQ(verify_ti(identity_channel(3), h), 0.0);
  const auto perm = unitary_channel(permutation_unitary({1, 2, 0}));
  EXPECT_GT(verify_ti(perm, h), 0.1);
  // yet the permutation maps incoherent states to incoherent states
  EXPECT_LT(incoherence_residual(perm, h), 1e-12);
}

TEST(VerifyTI, UnitaryCovarianceIffCommuting) {
  Rng rng = substream(56, 0);
  const auto h = random_hamiltonian(3, rng);
  // a function of H commutes with H
  const ComplexMatrix u = h.propagator(0.77);
  EXPECT_LT(verify_ti(unitary_channel(u), h), 1e-12);
  EXPECT_GT(verify_ti(unitary_channel(haar_unitary(3, rng)), h), 1e-3);
}

TEST(VerifyIncoherent, Examples) {
  const auto h = testing::qubit_h();
  EXPECT_EQ(verify_incoherent(dephasing_channel(h), h), 0.0);
  ComplexMatrix had(2, 2);
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  EXPECT_GT(incoherence_residual(unitary_channel(had), h), 0.5);
  EXPECT_EQ(kind_of([&] { verify_incoherent(unitary_channel(had), h); }), ErrorKind::MissingCertificate);
  EXPECT_EQ(kind_of([&] { harmonic_residual(unitary_channel(had), h); }), ErrorKind::MissingCertificate);
}

TEST(HarmonicResidual, DetectsWrongFrequencies) {
  const auto h = testing::qubit_h();
  ComplexMatrix lower = ComplexMatrix::Zero(2, 2);
  lower(0, 1) = 1.0;
  ComplexMatrix keep = diag({1, 0});
  // amplitude damping to the ground state: e^{-iHt}|0><1|e^{iHt} = e^{it}|0><1|
  const QuantumChannel good({lower, keep}, std::vector<double>{1.0, 0.0});
  const QuantumChannel bad({lower, keep}, std::vector<double>{-1.0, 0.0});
  EXPECT_LT(harmonic_residual(good, h), 1e-14);
  EXPECT_GT(harmonic_residual(bad, h), 0.1);
}

TEST(ProbeStates, SpanOperatorSpace) {
  const auto probes = probe_states(identity(3));
  ASSERT_EQ(probes.size(), 9u);
  Eigen::MatrixXcd stacked(9, 9);
  for (int k = 0; k < 9; ++k) stacked.col(k) = Eigen::Map<const ComplexVector>(probes[k].data(), 9);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(stacked);
  EXPECT_EQ(lu.rank(), 9);
}

}  // namespace
}  // namespace qsl
