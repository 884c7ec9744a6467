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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qsl/config.hpp"
#include "qsl/error.hpp"
#include "qsl/operator_core.hpp"

namespace qsl {

/// One distinct eigenvalue of a Hamiltonian together with its eigenspace.
struct EnergyLevel {
  double energy = 0.0;
  std::vector<Eigen::Index> indices;  // columns of the spectral decomposition
  ComplexMatrix projector;
};

/// Groups ascending eigenvalues into levels: consecutive eigenvalues closer
/// than gap * max(1, spread) share a level. The level energy is the mean of
/// its members.
inline std::vector<EnergyLevel> group_levels(const SpectralDecomposition& sd, double gap_tol) {
  std::vector<EnergyLevel> levels;
  const Eigen::Index n = sd.dim();
  if (n == 0) return levels;
  const double spread = sd.eigenvalues(n - 1) - sd.eigenvalues(0);
  const double gap = gap_tol * std::max(1.0, spread);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (levels.empty() || sd.eigenvalues(k) - sd.eigenvalues(levels.back().indices.back()) > gap)
      levels.push_back({});
    levels.back().indices.push_back(k);
  }
  for (auto& level : levels) {
    ComplexMatrix basis(n, static_cast<Eigen::Index>(level.indices.size()));
    double sum = 0.0;
    for (std::size_t j = 0; j < level.indices.size(); ++j) {
      basis.col(static_cast<Eigen::Index>(j)) = sd.eigenvectors.col(level.indices[j]);
      sum += sd.eigenvalues(level.indices[j]);
    }
    level.energy = sum / static_cast<double>(level.indices.size());
    level.projector = basis * basis.adjoint();
  }
  return levels;
}

/// Time-independent Hermitian generator with its spectrum cached.
class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix matrix, const Tolerances& tol = default_tolerances())
      : matrix_(std::move(matrix)), spectrum_(eig_hermitian(matrix_, tol)) {
    matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
    levels_ = group_levels(spectrum_, tol.gap);
  }

  static Hamiltonian diagonal(const std::vector<double>& energies,
                              const Tolerances& tol = default_tolerances()) {
    RealVector e = Eigen::Map<const RealVector>(energies.data(), static_cast<Eigen::Index>(energies.size()));
    return Hamiltonian(e.cast<Complex>().asDiagonal(), tol);
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  const std::vector<EnergyLevel>& levels() const { return levels_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  /// max - min eigenvalue.
  double spread() const { return spectrum_.eigenvalues(dim() - 1) - spectrum_.eigenvalues(0); }

  /// e^{-iHt}.
  ComplexMatrix propagator(double t) const { return unitary_evolution(spectrum_, t); }

 private:
  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
  std::vector<EnergyLevel> levels_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  double purity() const { return purity_; }
  bool is_pure(double tol = 1e-9) const { return purity_ >= 1.0 - tol; }

  /// Principal square root.
  ComplexMatrix sqrt() const { return sqrt_psd(spectrum_); }

  /// rho^p on the support.
  ComplexMatrix power(double p) const { return support_power(spectrum_, p); }

  /// Number of eigenvalues above the clamp threshold.
  Eigen::Index rank(const Tolerances& tol = default_tolerances()) const {
    const double cut = clamp_threshold(spectrum_, tol);
    return (spectrum_.eigenvalues.array() > cut).count();
  }

  /// |psi><psi| for a nonzero vector; the vector is normalized.
  static DensityMatrix pure(const ComplexVector& psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0) || !psi.allFinite())
      throw Error(ErrorKind::InvalidArgument, "pure: zero or non-finite vector");
    const ComplexVector v = psi / norm;
    return DensityMatrix(v * v.adjoint());
  }

  friend DensityMatrix validate_state(const ComplexMatrix& m, const Tolerances& tol);

 private:
  explicit DensityMatrix(ComplexMatrix m)
      : matrix_(0.5 * (m + m.adjoint())), spectrum_(eig_hermitian(matrix_)) {
    purity_ = (matrix_ * matrix_).trace().real();
  }
  DensityMatrix(ComplexMatrix m, SpectralDecomposition sd)
      : matrix_(std::move(m)), spectrum_(std::move(sd)) {
    purity_ = (matrix_ * matrix_).trace().real();
  }

  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
  double purity_ = 1.0;
};

/// Checks a matrix is a density matrix. Eigenvalues in (-positivity, 0) are
/// set to zero and the state renormalized.
inline DensityMatrix validate_state(const ComplexMatrix& m,
                                    const Tolerances& tol = default_tolerances()) {
  require_square(m, "validate_state");
  const double herm = hermiticity_residual(m);
  if (herm > tol.herm)
    throw Error(ErrorKind::NotHermitian, "validate_state: hermiticity residual " + std::to_string(herm));
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  const double trace = sym.trace().real();
  if (std::abs(trace - 1.0) > tol.trace)
    throw Error(ErrorKind::TraceNotOne, "validate_state: trace " + std::to_string(trace));
  SpectralDecomposition sd = eig_hermitian(sym, tol);
  const double min_eig = sd.eigenvalues(0);
  if (min_eig < -tol.positivity)
    throw Error(ErrorKind::NotPositive, "validate_state: eigenvalue " + std::to_string(min_eig));
  if (min_eig < 0.0) {
    sd.eigenvalues = sd.eigenvalues.cwiseMax(0.0);
    sd.eigenvalues /= sd.eigenvalues.sum();
    const ComplexMatrix rebuilt = sd.reconstruct();
    return DensityMatrix(0.5 * (rebuilt + rebuilt.adjoint()), std::move(sd));
  }
  return DensityMatrix(sym, std::move(sd));
}

/// Factor dimensions of a composite system.
struct CompositeLabel {
  std::vector<Eigen::Index> dims;

  Eigen::Index total() const {
    return std::accumulate(dims.begin(), dims.end(), Eigen::Index{1}, std::multiplies<>());
  }
};

/// true iff ||[H, rho]||_1 <= tol.
inline bool is_incoherent(const DensityMatrix& rho, const Hamiltonian& h,
                          double tol = default_tolerances().incoherent) {
  return trace_norm(commutator(h.matrix(), rho.matrix())) <= tol;
}

/// H_A (x) I + I (x) H_B.
inline Hamiltonian tensor_hamiltonian(const Hamiltonian& a, const Hamiltonian& b,
                                      const Tolerances& tol = default_tolerances()) {
  return Hamiltonian(kron(a.matrix(), identity(b.dim())) + kron(identity(a.dim()), b.matrix()), tol);
}

inline DensityMatrix tensor_state(const DensityMatrix& a, const DensityMatrix& b) {
  return validate_state(kron(a.matrix(), b.matrix()));
}

/// Reduced operator on factor `keep` of a matrix on the composite `label`.
inline ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, const CompositeLabel& label,
                                          std::size_t keep) {
  if (label.dims.empty() || keep >= label.dims.size())
    throw Error(ErrorKind::DimensionMismatch, "partial_trace: factor index out of range");
  for (auto d : label.dims)
    if (d < 1) throw Error(ErrorKind::DimensionMismatch, "partial_trace: factor dimension < 1");
  if (m.rows() != label.total() || m.cols() != label.total())
    throw Error(ErrorKind::DimensionMismatch, "partial_trace: label does not match dimension");

  Eigen::Index before = 1, after = 1;
  for (std::size_t f = 0; f < keep; ++f) before *= label.dims[f];
  for (std::size_t f = keep + 1; f < label.dims.size(); ++f) after *= label.dims[f];
  const Eigen::Index kept = label.dims[keep];

  ComplexMatrix out = ComplexMatrix::Zero(kept, kept);
  for (Eigen::Index i = 0; i < kept; ++i)
    for (Eigen::Index j = 0; j < kept; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index a = 0; a < before; ++a)
        for (Eigen::Index b = 0; b < after; ++b)
          acc += m((a * kept + i) * after + b, (a * kept + j) * after + b);
      out(i, j) = acc;
    }
  return out;
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, const CompositeLabel& label,
                                   std::size_t keep) {
  return validate_state(partial_trace_matrix(rho.matrix(), label, keep));
}

/// U = sum_i |sigma(i)><i|.
inline ComplexMatrix permutation_unitary(const std::vector<Eigen::Index>& sigma) {
  const auto n = static_cast<Eigen::Index>(sigma.size());
  if (n == 0) throw Error(ErrorKind::NotPermutation, "permutation_unitary: empty permutation");
  std::vector<bool> seen(sigma.size(), false);
  for (auto s : sigma) {
    if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)])
      throw Error(ErrorKind::NotPermutation, "permutation_unitary: not a bijection");
    seen[static_cast<std::size_t>(s)] = true;
  }
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) u(sigma[static_cast<std::size_t>(i)], i) = 1.0;
  return u;
}

/// Same permutation applied to the eigenvectors of H instead of the
/// computational basis.
inline ComplexMatrix permutation_unitary(const std::vector<Eigen::Index>& sigma, const Hamiltonian& h) {
  if (static_cast<Eigen::Index>(sigma.size()) != h.dim())
    throw Error(ErrorKind::DimensionMismatch, "permutation_unitary: size differs from H");
  const ComplexMatrix& v = h.spectrum().eigenvectors;
  return v * permutation_unitary(sigma) * v.adjoint();
}

/// Population of each distinct level of H in rho.
inline std::vector<double> level_populations(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim())
    throw Error(ErrorKind::DimensionMismatch, "level_populations: state and Hamiltonian dims differ");
  std::vector<double> pops;
  pops.reserve(h.levels().size());
  for (const auto& level : h.levels()) pops.push_back((level.projector * rho.matrix()).trace().real());
  return pops;
}

}  // namespace qsl
