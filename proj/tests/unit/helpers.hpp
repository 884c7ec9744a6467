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

// Shared fixtures for the unit tests.

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qsl/qsl.hpp"

namespace qsl::testing {

inline constexpr double kPi = std::numbers::pi;

inline ComplexVector ket(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const auto& a : amps) v(i++) = a;
  return v;
}

inline ComplexVector basis(Eigen::Index n, Eigen::Index k) {
  ComplexVector v = ComplexVector::Zero(n);
  v(k) = 1.0;
  return v;
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
  std::vector<double> v(values);
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
  return m;
}

inline Hamiltonian qubit_h() { return Hamiltonian::diagonal({0.0, 1.0}); }
inline DensityMatrix plus() { return DensityMatrix::pure(ket({1.0, 1.0})); }
inline DensityMatrix minus() { return DensityMatrix::pure(ket({1.0, -1.0})); }

// (1-p) I/2 + p |+><+|
inline DensityMatrix rho_p(double p) {
  ComplexMatrix m(2, 2);
  m << 0.5, 0.5 * p, 0.5 * p, 0.5;
  return validate_state(m);
}

// Direct tr(H^2 rho) - tr(sqrt(rho) H sqrt(rho) H), square root by
// eigendecomposition; round-off eigenvalues below 1e-12 count as zero.
inline double skew_oracle(const ComplexMatrix& rho, const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
  RealVector ev = es.eigenvalues().unaryExpr([](double x) { return x > 1e-12 ? std::sqrt(x) : 0.0; });
  const ComplexMatrix root = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return (h * h * rho).trace().real() - (root * h * root * h).trace().real();
}

// Sum of singular values by JacobiSVD.
inline double svd_trace_norm(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

}  // namespace qsl::testing
