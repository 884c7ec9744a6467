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

#pragma once

// Translationally invariant (TI) channels: channels commuting with the
// time-translation action rho -> e^{-iHt} rho e^{iHt}. Construction
// (dephasing, constant, Stinespring dilation with an energy-conserving
// coupling), composition, and numerical certification.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsl/config.hpp"
#include "qsl/error.hpp"
#include "qsl/operator_core.hpp"
#include "qsl/random.hpp"
#include "qsl/states.hpp"

namespace qsl {

/// CPTP map in Kraus form with equal input and output dimension. The
/// optional certificate lists one frequency per Kraus operator, asserting
/// e^{-iHt} K_mu e^{iHt} = e^{i omega_mu t} K_mu.
class QuantumChannel {
 public:
  QuantumChannel(std::vector<ComplexMatrix> kraus, std::optional<std::vector<double>> omegas = std::nullopt,
                 const Tolerances& tol = default_tolerances())
      : kraus_(std::move(kraus)), omegas_(std::move(omegas)) {
    if (kraus_.empty()) throw Error(ErrorKind::DimensionMismatch, "QuantumChannel: no Kraus operators");
    const Eigen::Index n = kraus_.front().rows();
    for (const auto& k : kraus_) {
      if (k.rows() != n || k.cols() != n || n < 1)
        throw Error(ErrorKind::DimensionMismatch, "QuantumChannel: Kraus operators must share a square shape");
      if (!k.allFinite()) throw Error(ErrorKind::InvalidArgument, "QuantumChannel: non-finite Kraus entry");
    }
    if (omegas_ && omegas_->size() != kraus_.size())
      throw Error(ErrorKind::DimensionMismatch, "QuantumChannel: one frequency per Kraus operator required");
    const double residual = completeness_residual();
    if (residual > tol.completeness)
      throw Error(ErrorKind::NotTracePreserving,
                  "QuantumChannel: completeness residual " + std::to_string(residual));
  }

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::optional<std::vector<double>>& omegas() const { return omegas_; }
  Eigen::Index dim() const { return kraus_.front().rows(); }

  /// ||sum K^dag K - I||_F.
  double completeness_residual() const {
    ComplexMatrix s = -identity(kraus_.front().cols());
    for (const auto& k : kraus_) s += k.adjoint() * k;
    return s.norm();
  }

  /// Linear action on an arbitrary operator.
  ComplexMatrix apply(const ComplexMatrix& x) const {
    require_same_dims(kraus_.front(), x, "QuantumChannel::apply");
    ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
    for (const auto& k : kraus_) out.noalias() += k * x * k.adjoint();
    return out;
  }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::optional<std::vector<double>> omegas_;
};

inline DensityMatrix apply_channel(const QuantumChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim())
    throw Error(ErrorKind::DimensionMismatch, "apply_channel: channel and state dims differ");
  const ComplexMatrix out = channel.apply(rho.matrix());
  return validate_state(out / out.trace().real());
}

inline QuantumChannel identity_channel(Eigen::Index dim) {
  return QuantumChannel({identity(dim)}, std::vector<double>{0.0});
}

/// rho -> U rho U^dag, uncertified.
inline QuantumChannel unitary_channel(const ComplexMatrix& u) {
  require_square(u, "unitary_channel");
  return QuantumChannel({u});
}

/// Kraus operators are the spectral projectors of the distinct levels of H.
inline QuantumChannel dephasing_channel(const Hamiltonian& h) {
  std::vector<ComplexMatrix> kraus;
  for (const auto& level : h.levels()) kraus.push_back(level.projector);
  std::vector<double> omegas(kraus.size(), 0.0);
  return QuantumChannel(std::move(kraus), std::move(omegas));
}

/// Discards the input and prepares sigma, which must be incoherent for H.
/// Kraus operators sqrt(p_i)|v_i><e_j| pair joint eigenvectors v_i of
/// (sigma, H) with eigenvectors e_j of H, so each is harmonic.
inline QuantumChannel constant_channel(const DensityMatrix& sigma, const Hamiltonian& h,
                                       const Tolerances& tol = default_tolerances()) {
  if (sigma.dim() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "constant_channel: dims differ");
  if (!is_incoherent(sigma, h, tol.incoherent))
    throw Error(ErrorKind::NotIncoherentTarget, "constant_channel: target state has coherence");
  const Eigen::Index n = h.dim();
  const ComplexMatrix& e = h.spectrum().eigenvectors;
  std::vector<ComplexMatrix> kraus;
  std::vector<double> omegas;
  for (const auto& level : h.levels()) {
    const auto m = static_cast<Eigen::Index>(level.indices.size());
    ComplexMatrix basis(n, m);
    for (Eigen::Index j = 0; j < m; ++j) basis.col(j) = e.col(level.indices[static_cast<std::size_t>(j)]);
    const ComplexMatrix block = basis.adjoint() * sigma.matrix() * basis;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (block + block.adjoint()));
    for (Eigen::Index i = 0; i < m; ++i) {
      const double p = solver.eigenvalues()(i);
      if (p <= tol.support) continue;
      const ComplexVector v = basis * solver.eigenvectors().col(i);
      for (Eigen::Index j = 0; j < n; ++j) {
        kraus.push_back(std::sqrt(p) * v * e.col(j).adjoint());
        omegas.push_back(h.spectrum().eigenvalues(j) - level.energy);
      }
    }
  }
  // Populations below tol.support were dropped; restore trace preservation.
  double kept = 0.0;
  for (const auto& k : kraus) kept += (k.adjoint() * k).trace().real();
  const double scale = std::sqrt(static_cast<double>(n) / kept);
  for (auto& k : kraus) k *= scale;
  return QuantumChannel(std::move(kraus), std::move(omegas));
}

/// second o first. Certificates compose additively.
inline QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first) {
  if (second.dim() != first.dim()) throw Error(ErrorKind::DimensionMismatch, "compose: dims differ");
  std::vector<ComplexMatrix> kraus;
  std::optional<std::vector<double>> omegas;
  if (second.omegas() && first.omegas()) omegas.emplace();
  for (std::size_t a = 0; a < second.kraus().size(); ++a)
    for (std::size_t b = 0; b < first.kraus().size(); ++b) {
      kraus.push_back(second.kraus()[a] * first.kraus()[b]);
      if (omegas) omegas->push_back((*second.omegas())[a] + (*first.omegas())[b]);
    }
  return QuantumChannel(std::move(kraus), std::move(omegas));
}

/// Random channel without any symmetry: K_mu = G_mu S^{-1/2} with Gaussian
/// G_mu and S = sum G^dag G.
inline QuantumChannel random_channel(Eigen::Index dim, Eigen::Index kraus_count, Rng& rng) {
  std::vector<ComplexMatrix> g;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < kraus_count; ++k) {
    g.push_back(ginibre(dim, dim, rng));
    s += g.back().adjoint() * g.back();
  }
  const ComplexMatrix inv_sqrt = matrix_function(
      eig_hermitian(s), [](double x) -> Complex { return 1.0 / std::sqrt(x); }, Clamp::No);
  for (auto& k : g) k = k * inv_sqrt;
  return QuantumChannel(std::move(g));
}

/// Joint unitary on system (x) environment commuting with the total
/// Hamiltonian; the environment starts in eigenvector env_initial_index of
/// env_hamiltonian.
struct StinespringDilation {
  Hamiltonian env_hamiltonian;
  ComplexMatrix unitary;
  Eigen::Index env_initial_index = 0;
  /// Sizes of the total-energy blocks the unitary was sampled on.
  std::vector<Eigen::Index> block_sizes;
};

/// H_sys (x) I + I (x) H_env.
inline ComplexMatrix total_hamiltonian(const Hamiltonian& h_sys, const Hamiltonian& h_env) {
  return kron(h_sys.matrix(), identity(h_env.dim())) + kron(identity(h_sys.dim()), h_env.matrix());
}

/// ||[V, H_sys (x) I + I (x) H_env]||_F.
inline double energy_conservation_residual(const StinespringDilation& dil, const Hamiltonian& h_sys) {
  const ComplexMatrix total = total_hamiltonian(h_sys, dil.env_hamiltonian);
  if (total.rows() != dil.unitary.rows() || dil.unitary.rows() != dil.unitary.cols())
    throw Error(ErrorKind::DimensionMismatch, "energy_conservation_residual: unitary has wrong shape");
  return commutator(dil.unitary, total).norm();
}

/// Haar-random unitary on each block of equal total energy (levels of the
/// eigenvalue sums grouped with tol.gap), assembled in the product
/// eigenbasis. Each block draws from its own seeded sub-stream.
inline StinespringDilation random_energy_conserving_unitary(const Hamiltonian& h_sys, const Hamiltonian& h_env,
                                                            std::uint64_t seed,
                                                            Eigen::Index env_initial_index = 0,
                                                            const Tolerances& tol = default_tolerances()) {
  if (env_initial_index < 0 || env_initial_index >= h_env.dim())
    throw Error(ErrorKind::InvalidArgument, "random_energy_conserving_unitary: initial index out of range");
  const Eigen::Index ds = h_sys.dim();
  const Eigen::Index de = h_env.dim();
  const Eigen::Index n = ds * de;
  const ComplexMatrix basis = kron(h_sys.spectrum().eigenvectors, h_env.spectrum().eigenvectors);

  std::vector<std::pair<double, Eigen::Index>> sums;
  for (Eigen::Index i = 0; i < ds; ++i)
    for (Eigen::Index j = 0; j < de; ++j)
      sums.emplace_back(h_sys.spectrum().eigenvalues(i) + h_env.spectrum().eigenvalues(j), i * de + j);
  std::stable_sort(sums.begin(), sums.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  const double spread = sums.back().first - sums.front().first;
  const double gap = tol.gap * std::max(1.0, spread);

  std::vector<std::vector<Eigen::Index>> blocks;
  double last = 0.0;
  for (const auto& [energy, index] : sums) {
    if (blocks.empty() || energy - last > gap) blocks.emplace_back();
    blocks.back().push_back(index);
    last = energy;
  }

  ComplexMatrix w = ComplexMatrix::Zero(n, n);
  std::vector<Eigen::Index> sizes;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto m = static_cast<Eigen::Index>(blocks[b].size());
    sizes.push_back(m);
    Rng rng = substream(seed, b);
    const ComplexMatrix u = haar_unitary(m, rng);
    for (Eigen::Index r = 0; r < m; ++r)
      for (Eigen::Index c = 0; c < m; ++c)
        w(blocks[b][static_cast<std::size_t>(r)], blocks[b][static_cast<std::size_t>(c)]) = u(r, c);
  }
  return {h_env, basis * w * basis.adjoint(), env_initial_index, std::move(sizes)};
}

/// K_l = (I (x) <E_l|) V (I (x) |E_0>) with omega_l = E_l - E_0. Kraus
/// operators with Frobenius norm below 1e-13 are dropped.
inline QuantumChannel dilation_to_channel(const StinespringDilation& dil, const Hamiltonian& h_sys,
                                          const Tolerances& tol = default_tolerances()) {
  const Eigen::Index ds = h_sys.dim();
  const Eigen::Index de = dil.env_hamiltonian.dim();
  if (dil.unitary.rows() != ds * de || dil.unitary.cols() != ds * de)
    throw Error(ErrorKind::InvalidDilation, "dilation_to_channel: unitary dimension mismatch");
  if (dil.env_initial_index < 0 || dil.env_initial_index >= de)
    throw Error(ErrorKind::InvalidDilation, "dilation_to_channel: initial index out of range");
  const double unitarity = unitarity_residual(dil.unitary);
  if (unitarity > 1e-10 * std::sqrt(static_cast<double>(ds * de)))
    throw Error(ErrorKind::InvalidDilation, "dilation_to_channel: unitarity residual " + std::to_string(unitarity));
  const double scale = std::max(1.0, total_hamiltonian(h_sys, dil.env_hamiltonian).norm());
  const double conservation = energy_conservation_residual(dil, h_sys);
  if (conservation > tol.completeness * scale)
    throw Error(ErrorKind::InvalidDilation,
                "dilation_to_channel: energy conservation residual " + std::to_string(conservation));

  const ComplexMatrix& env = dil.env_hamiltonian.spectrum().eigenvectors;
  const RealVector& energies = dil.env_hamiltonian.spectrum().eigenvalues;
  const ComplexVector e0 = env.col(dil.env_initial_index);
  const ComplexMatrix input = kron(identity(ds), e0);  // (ds*de) x ds
  std::vector<ComplexMatrix> kraus;
  std::vector<double> omegas;
  for (Eigen::Index l = 0; l < de; ++l) {
    const ComplexMatrix output = kron(identity(ds), env.col(l));
    ComplexMatrix k = output.adjoint() * dil.unitary * input;
    if (k.norm() < 1e-13) continue;
    kraus.push_back(std::move(k));
    omegas.push_back(energies(l) - energies(dil.env_initial_index));
  }
  return QuantumChannel(std::move(kraus), std::move(omegas), tol);
}

/// Sample times for covariance checks; the last is an irrational multiple of pi.
inline std::vector<double> default_t_samples() {
  return {0.1, 1.0, 2.5, 7.3, std::numbers::pi * std::numbers::sqrt2};
}

/// max over t and mu of ||e^{-iHt} K_mu e^{iHt} - e^{i omega_mu t} K_mu||_F.
inline double harmonic_residual(const QuantumChannel& channel, const Hamiltonian& h,
                                const std::vector<double>& t_samples = default_t_samples()) {
  if (!channel.omegas()) throw Error(ErrorKind::MissingCertificate, "harmonic_residual: channel has no frequencies");
  if (channel.dim() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "harmonic_residual: dims differ");
  double worst = 0.0;
  for (double t : t_samples) {
    const ComplexMatrix u = h.propagator(t);
    for (std::size_t mu = 0; mu < channel.kraus().size(); ++mu) {
      const ComplexMatrix& k = channel.kraus()[mu];
      const Complex phase = std::exp(kI * (*channel.omegas())[mu] * t);
      worst = std::max(worst, (u * k * u.adjoint() - phase * k).norm());
    }
  }
  return worst;
}

/// The d^2 pure states |i>, (|i>+|j>)/sqrt2, (|i>+i|j>)/sqrt2 (i<j) of the
/// basis `basis` (columns); their projectors span the operator space.
inline std::vector<ComplexMatrix> probe_states(const ComplexMatrix& basis) {
  const Eigen::Index n = basis.cols();
  std::vector<ComplexMatrix> probes;
  const auto add = [&](const ComplexVector& v) {
    const ComplexVector u = v / v.norm();
    probes.push_back(u * u.adjoint());
  };
  for (Eigen::Index i = 0; i < n; ++i) add(basis.col(i));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      add(basis.col(i) + basis.col(j));
      add(basis.col(i) + kI * basis.col(j));
    }
  return probes;
}

/// Covariance defect max over t and probe states rho of
/// ||e^{-iHt} Phi(rho) e^{iHt} - Phi(e^{-iHt} rho e^{iHt})||_1.
inline double verify_ti(const QuantumChannel& channel, const Hamiltonian& h,
                        const std::vector<double>& t_samples = default_t_samples()) {
  if (channel.dim() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "verify_ti: dims differ");
  const auto probes = probe_states(identity(h.dim()));
  double worst = 0.0;
  for (double t : t_samples) {
    const ComplexMatrix u = h.propagator(t);
    for (const auto& rho : probes) {
      const ComplexMatrix lhs = u * channel.apply(rho) * u.adjoint();
      const ComplexMatrix rhs = channel.apply(u * rho * u.adjoint());
      worst = std::max(worst, trace_norm_hermitian(lhs - rhs));
    }
  }
  return worst;
}

/// X minus its block-diagonal part with respect to the levels of H.
inline ComplexMatrix level_offdiagonal(const ComplexMatrix& x, const Hamiltonian& h) {
  ComplexMatrix diag = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& level : h.levels()) diag += level.projector * x * level.projector;
  return x - diag;
}

/// Per-Kraus incoherence defect: max over incoherent probe states rho and
/// Kraus operators K of ||offdiag(K rho K^dag)||_1. The probes span the
/// block-diagonal operators, so zero means every Kraus operator maps
/// incoherent states to (unnormalized) incoherent states.
inline double incoherence_residual(const QuantumChannel& channel, const Hamiltonian& h) {
  if (channel.dim() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "incoherence_residual: dims differ");
  const ComplexMatrix& e = h.spectrum().eigenvectors;
  double worst = 0.0;
  for (const auto& level : h.levels()) {
    ComplexMatrix basis(h.dim(), static_cast<Eigen::Index>(level.indices.size()));
    for (std::size_t j = 0; j < level.indices.size(); ++j)
      basis.col(static_cast<Eigen::Index>(j)) = e.col(level.indices[j]);
    for (const auto& rho : probe_states(basis))
      for (const auto& k : channel.kraus())
        worst = std::max(worst, trace_norm_hermitian(level_offdiagonal(k * rho * k.adjoint(), h)));
  }
  return worst;
}

/// incoherence_residual for a channel carrying a harmonic certificate.
inline double verify_incoherent(const QuantumChannel& channel, const Hamiltonian& h) {
  if (!channel.omegas())
    throw Error(ErrorKind::MissingCertificate, "verify_incoherent: channel has no harmonic certificate");
  return incoherence_residual(channel, h);
}

}  // namespace qsl
