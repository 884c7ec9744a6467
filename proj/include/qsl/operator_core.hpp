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

// Dense complex-matrix kernel: Hermitian eigendecomposition, spectral
// calculus, trace norm, commutators, Kronecker products.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qsl/config.hpp"
#include "qsl/error.hpp"

namespace qsl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // columns

  Eigen::Index dim() const { return eigenvalues.size(); }

  ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }
};

inline double max_abs_entry(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& a) { return a.allFinite(); }

inline void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(who) + ": expected a non-empty square matrix, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  if (!all_finite(a)) throw Error(ErrorKind::InvalidArgument, std::string(who) + ": non-finite entry");
}

inline void require_same_dims(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(who) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

/// max |A - A^dag| relative to max |A| (absolute when A is zero).
inline double hermiticity_residual(const ComplexMatrix& a) {
  const double scale = std::max(1.0, max_abs_entry(a));
  return max_abs_entry(a - a.adjoint()) / scale;
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = default_tolerances().herm) {
  return a.rows() == a.cols() && hermiticity_residual(a) <= tol;
}

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized
/// before solving; each eigenvector is phased so its largest component is
/// real and positive, which makes the output reproducible for equal input.
inline SpectralDecomposition eig_hermitian(const ComplexMatrix& a,
                                           const Tolerances& tol = default_tolerances()) {
  require_square(a, "eig_hermitian");
  const double residual = hermiticity_residual(a);
  if (residual > tol.herm)
    throw Error(ErrorKind::NotHermitian,
                "eig_hermitian: hermiticity residual " + std::to_string(residual));
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::DomainError, "eig_hermitian: eigensolver did not converge");
  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < out.dim(); ++k) {
    Eigen::Index pivot = 0;
    out.eigenvectors.col(k).cwiseAbs().maxCoeff(&pivot);
    const Complex c = out.eigenvectors(pivot, k);
    out.eigenvectors.col(k) *= std::conj(c) / std::abs(c);
  }
  return out;
}

/// Eigenvalues only, ascending. Cheaper than eig_hermitian for hot loops.
inline RealVector eigenvalues_hermitian(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (a + a.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Zero threshold applied to eigenvalues before powers.
inline double clamp_threshold(const SpectralDecomposition& sd, const Tolerances& tol) {
  const double spectral_norm = sd.eigenvalues.size() ? sd.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return tol.clamp * std::max(1.0, spectral_norm);
}

enum class Clamp { Yes, No };

/// sum_k f(lambda_k) v_k v_k^dag. With Clamp::Yes, eigenvalues within the
/// clamp threshold of zero are passed to f as exactly 0.
template <typename F>
ComplexMatrix matrix_function(const SpectralDecomposition& sd, F&& f, Clamp clamp = Clamp::Yes,
                              const Tolerances& tol = default_tolerances()) {
  const double cut = clamp == Clamp::Yes ? clamp_threshold(sd, tol) : 0.0;
  ComplexVector values(sd.dim());
  for (Eigen::Index k = 0; k < sd.dim(); ++k) {
    double lambda = sd.eigenvalues(k);
    if (clamp == Clamp::Yes && std::abs(lambda) <= cut) lambda = 0.0;
    const Complex v = f(lambda);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorKind::DomainError,
                  "matrix_function: function undefined at eigenvalue " + std::to_string(lambda));
    values(k) = v;
  }
  return sd.eigenvectors * values.asDiagonal() * sd.eigenvectors.adjoint();
}

template <typename F>
ComplexMatrix matrix_function(const ComplexMatrix& a, F&& f, Clamp clamp = Clamp::Yes,
                              const Tolerances& tol = default_tolerances()) {
  return matrix_function(eig_hermitian(a, tol), std::forward<F>(f), clamp, tol);
}

/// A^p restricted to the support: clamped-zero eigenvalues map to 0 for any
/// p (A^0 is the support projector, negative p the pseudo-inverse power). Negative eigenvalues
/// beyond the clamp are a DomainError for non-integer p.
inline ComplexMatrix support_power(const SpectralDecomposition& sd, double p,
                                   const Tolerances& tol = default_tolerances()) {
  return matrix_function(
      sd,
      [p](double lambda) -> Complex {
        if (lambda == 0.0) return 0.0;
        if (lambda < 0.0 && p != std::floor(p)) return {std::nan(""), 0.0};
        return std::pow(lambda, p);
      },
      Clamp::Yes, tol);
}

inline ComplexMatrix sqrt_psd(const SpectralDecomposition& sd,
                              const Tolerances& tol = default_tolerances()) {
  return matrix_function(
      sd,
      [](double lambda) -> Complex { return lambda < 0.0 ? std::nan("") : std::sqrt(lambda); },
      Clamp::Yes, tol);
}

/// e^{-iHt} from the spectral decomposition of H.
inline ComplexMatrix unitary_evolution(const SpectralDecomposition& h, double t) {
  return matrix_function(
      h, [t](double lambda) { return std::exp(-kI * lambda * t); }, Clamp::No);
}

/// Sum of |eigenvalues| of a Hermitian matrix.
inline double trace_norm_hermitian(const ComplexMatrix& a) {
  return eigenvalues_hermitian(a).cwiseAbs().sum();
}

/// Sum of singular values.
inline double trace_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (!all_finite(a)) throw Error(ErrorKind::InvalidArgument, "trace_norm: non-finite entry");
  if (a.rows() == a.cols() && hermiticity_residual(a) <= 1e-14) return trace_norm_hermitian(a);
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "commutator: non-square");
  require_same_dims(a, b, "commutator");
  return a * b - b * a;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = Eigen::kroneckerProduct(a, b);
  return out;
}

inline ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

/// ||U^dag U - I||_F.
inline double unitarity_residual(const ComplexMatrix& u) {
  return (u.adjoint() * u - identity(u.cols())).norm();
}

}  // namespace qsl
