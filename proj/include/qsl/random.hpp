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

// Seeded samplers for states, Hamiltonians and unitaries.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "qsl/operator_core.hpp"
#include "qsl/states.hpp"

namespace qsl {

using Rng = std::mt19937_64;

/// Independent generator for sub-stream `stream` of `seed`; the result does
/// not depend on how many other streams were drawn first.
inline Rng substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

inline ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
inline ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1.0);
  }
  return q;
}

inline ComplexVector random_vector(Eigen::Index n, Rng& rng) {
  ComplexVector v = ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

inline DensityMatrix random_pure_state(Eigen::Index n, Rng& rng) {
  return DensityMatrix::pure(random_vector(n, rng));
}

/// Induced-measure mixed state G G^dag / tr of rank `rank` (default full).
inline DensityMatrix random_density_matrix(Eigen::Index n, Rng& rng, Eigen::Index rank = -1) {
  if (rank <= 0 || rank > n) rank = n;
  const ComplexMatrix g = ginibre(n, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return validate_state(m);
}

/// Random probability vector on n outcomes (flat Dirichlet).
inline std::vector<double> random_distribution(Eigen::Index n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : p) total += (x = expo(rng));
  for (auto& x : p) x /= total;
  return p;
}

/// State diagonal in the eigenbasis of H.
inline DensityMatrix random_incoherent_state(const Hamiltonian& h, Rng& rng) {
  const auto p = random_distribution(h.dim(), rng);
  const ComplexMatrix& v = h.spectrum().eigenvectors;
  ComplexMatrix d = ComplexMatrix::Zero(h.dim(), h.dim());
  for (Eigen::Index k = 0; k < h.dim(); ++k) d(k, k) = p[static_cast<std::size_t>(k)];
  return validate_state(v * d * v.adjoint());
}

/// GUE-like (G + G^dag)/2.
inline Hamiltonian random_hamiltonian(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  return Hamiltonian(0.5 * (g + g.adjoint()));
}

/// Integer energies drawn from {0, ..., max_level} in a Haar-random basis.
/// Integer spectra make total-energy degeneracies of composite systems
/// generic, which is what gives energy-conserving couplings room to act.
inline Hamiltonian random_integer_hamiltonian(Eigen::Index n, Rng& rng, int max_level = 3) {
  std::uniform_int_distribution<int> level(0, max_level);
  RealVector e(n);
  for (Eigen::Index k = 0; k < n; ++k) e(k) = level(rng);
  const ComplexMatrix u = haar_unitary(n, rng);
  return Hamiltonian(u * e.cast<Complex>().asDiagonal() * u.adjoint());
}

}  // namespace qsl
