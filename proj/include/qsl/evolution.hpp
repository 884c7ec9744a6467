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

// Unitary orbits rho(t) = e^{-iHt} rho e^{iHt} and the first time at which
// the orbit becomes eps-distinguishable from its starting point.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qsl/asymmetry.hpp"
#include "qsl/config.hpp"
#include "qsl/distinguishability.hpp"
#include "qsl/error.hpp"
#include "qsl/extended_real.hpp"
#include "qsl/operator_core.hpp"
#include "qsl/states.hpp"

namespace qsl {

inline DensityMatrix evolve(const DensityMatrix& rho, const Hamiltonian& h, double t) {
  require_matching(rho, h, "evolve");
  const ComplexMatrix u = h.propagator(t);
  return validate_state(u * rho.matrix() * u.adjoint());
}

/// Evaluates t -> D(rho, rho(t)) in the eigenbasis of H, where the orbit is
/// an entrywise phase rotation. For Renyi orders the trace functional
/// f(t) = tr(rho^s rho(t)^(1-s)) is a finite trigonometric sum, which gives
/// a global Lipschitz constant for it.
class OrbitEvaluator {
 public:
  OrbitEvaluator(const DensityMatrix& rho, const Hamiltonian& h, DistinguishabilityMeasure measure,
                 const Tolerances& tol = default_tolerances())
      : measure_(measure), tol_(tol) {
    require_matching(rho, h, "OrbitEvaluator");
    const ComplexMatrix& v = h.spectrum().eigenvectors;
    energies_ = h.spectrum().eigenvalues;
    rho_ = v.adjoint() * rho.matrix() * v;
    const Eigen::Index n = rho.dim();
    full_rank_ = rho.rank(tol) == n;
    using Kind = DistinguishabilityMeasure::Kind;
    if (measure.kind() == Kind::Renyi) {
      const double s = measure.order();
      const ComplexMatrix a = v.adjoint() * rho.power(s) * v;
      const ComplexMatrix b = v.adjoint() * rho.power(1.0 - s) * v;
      coefficients_.resize(n, n);
      lipschitz_ = 0.0;
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
          coefficients_(j, k) = a(k, j) * b(j, k);
          lipschitz_ += std::abs(coefficients_(j, k)) * std::abs(energies_(j) - energies_(k));
        }
      if (s > 1.0 && !full_rank_) {
        support_ = v.adjoint() * support_power(rho.spectrum(), 0.0, tol) * v;
      }
    } else if (measure.kind() == Kind::Infidelity) {
      sqrt_rho_ = v.adjoint() * rho.sqrt() * v;
    }
    if (measure.kind() == Kind::TraceDistance || measure.kind() == Kind::Perp)
      lipschitz_ = f_measure(rho, h);
  }

  const DistinguishabilityMeasure& measure() const { return measure_; }

  /// rho(t) expressed in the eigenbasis of H.
  ComplexMatrix rotated(double t) const {
    const Eigen::Index n = rho_.rows();
    ComplexMatrix out(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        out(j, k) = rho_(j, k) * std::exp(-kI * (energies_(j) - energies_(k)) * t);
    return out;
  }

  double trace_distance_at(double t) const {
    if (t == 0.0) return 0.0;
    return std::min(2.0, trace_norm_hermitian(rho_ - rotated(t)));
  }

  /// tr(rho^s rho(t)^(1-s)) with powers on the support.
  double renyi_overlap_at(double t) const {
    const Eigen::Index n = coefficients_.rows();
    double acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        acc += (coefficients_(j, k) * std::exp(-kI * (energies_(j) - energies_(k)) * t)).real();
    return acc;
  }

  ExtendedReal renyi_at(double t) const {
    if (t == 0.0) return 0.0;
    const double s = measure_.order();
    if (s > 1.0 && !full_rank_) {
      const Eigen::Index n = support_.rows();
      ComplexMatrix moved(n, n);
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
          moved(j, k) = support_(j, k) * std::exp(-kI * (energies_(j) - energies_(k)) * t);
      const double outside = 1.0 - (moved * rho_).trace().real();
      if (outside > tol_.support) return ExtendedReal::infinity();
    }
    const double overlap = renyi_overlap_at(t);
    if (s < 1.0 && overlap <= tol_.zero_overlap) return ExtendedReal::infinity();
    return std::max(0.0, std::log(overlap) / (s - 1.0));
  }

  double infidelity_at(double t) const {
    if (t == 0.0) return 0.0;
    const RealVector lambda = eigenvalues_hermitian(sqrt_rho_ * rotated(t) * sqrt_rho_);
    return 1.0 - std::clamp(detail::sqrt_trace_squared(lambda, tol_), 0.0, 1.0);
  }

  ExtendedReal operator()(double t) const {
    using Kind = DistinguishabilityMeasure::Kind;
    switch (measure_.kind()) {
      case Kind::TraceDistance: return trace_distance_at(t);
      case Kind::Renyi: return renyi_at(t);
      case Kind::Infidelity: return infidelity_at(t);
      case Kind::Perp: return trace_distance_at(t) >= 2.0 - tol_.perp ? 1.0 : 0.0;
    }
    return 0.0;
  }

  /// Reduction of "D(rho, rho(t)) >= eps" to "h(t) >= threshold" for a
  /// scalar monitor h, optionally with a Lipschitz constant for h.
  struct Monitor {
    double threshold = 0.0;
    std::optional<double> lipschitz;
  };

  Monitor monitor(double eps) const {
    using Kind = DistinguishabilityMeasure::Kind;
    switch (measure_.kind()) {
      case Kind::TraceDistance: return {eps, lipschitz_};
      case Kind::Perp: return {2.0 - tol_.perp, lipschitz_};
      case Kind::Infidelity: return {eps, std::nullopt};
      case Kind::Renyi: {
        const double s = measure_.order();
        if (s < 1.0) return {-std::max(std::exp((s - 1.0) * eps), tol_.zero_overlap), lipschitz_};
        if (full_rank_) return {std::exp((s - 1.0) * eps), lipschitz_};
        return {eps, std::nullopt};
      }
    }
    return {eps, std::nullopt};
  }

  double monitor_value(double t) const {
    using Kind = DistinguishabilityMeasure::Kind;
    switch (measure_.kind()) {
      case Kind::TraceDistance:
      case Kind::Perp: return trace_distance_at(t);
      case Kind::Infidelity: return infidelity_at(t);
      case Kind::Renyi: {
        const double s = measure_.order();
        if (s < 1.0) return -renyi_overlap_at(t);
        if (full_rank_) return renyi_overlap_at(t);
        return renyi_at(t).as_double();
      }
    }
    return 0.0;
  }

 private:
  DistinguishabilityMeasure measure_;
  Tolerances tol_;
  RealVector energies_;
  ComplexMatrix rho_;
  ComplexMatrix coefficients_;
  ComplexMatrix sqrt_rho_;
  ComplexMatrix support_;
  double lipschitz_ = 0.0;
  bool full_rank_ = true;
};

enum class TauStatus { Reached, UnreachedWithinHorizon };

inline const char* to_string(TauStatus s) {
  return s == TauStatus::Reached ? "reached" : "unreached_within_horizon";
}

struct TauResult {
  TauStatus status = TauStatus::UnreachedWithinHorizon;
  double t_star = 0.0;         // meaningful when Reached
  double bracket_width = 0.0;  // t_star - last time known below threshold
  double epsilon = 0.0;
  DistinguishabilityMeasure measure = DistinguishabilityMeasure::trace();
  double horizon = 0.0;
  double grid_step = 0.0;
  bool lipschitz_certified = false;  // no sub-grid crossing can be missed
  long evaluations = 0;
  long unresolved_intervals = 0;  // t_tol-wide cells that may hide a tangential touch

  bool reached() const { return status == TauStatus::Reached; }
  ExtendedReal tau() const { return reached() ? ExtendedReal(t_star) : ExtendedReal::infinity(); }
};

struct TauOptions {
  std::optional<double> horizon;  // default: 50 pi / dE(rho)
  double t_tol = 1e-6;
  std::optional<double> grid_step;
};

inline constexpr double kHorizonFactor = 50.0;

/// 50 pi / dE(rho), or nullopt when dE = 0 and the orbit is stationary.
inline std::optional<double> default_horizon(const DensityMatrix& rho, const Hamiltonian& h,
                                             const Tolerances& tol = default_tolerances()) {
  const double de = energy_stats(rho, h, tol).deviation;
  if (de <= tol.zero_denominator) return std::nullopt;
  return kHorizonFactor * std::numbers::pi / de;
}

namespace detail {

struct CrossingSearch {
  const OrbitEvaluator& orbit;
  double threshold;
  std::optional<double> lipschitz;
  double t_tol;
  long evaluations = 0;
  long unresolved = 0;

  double eval(double t) {
    ++evaluations;
    return orbit.monitor_value(t);
  }

  struct Hit {
    double t;
    double width;
  };

  bool may_cross(double a, double ha, double b, double hb) const {
    if (hb >= threshold) return true;
    if (!lipschitz) return false;
    return 0.5 * (ha + hb) + 0.5 * *lipschitz * (b - a) >= threshold;
  }

  // Earliest crossing in (a, b] given h(a) < threshold.
  std::optional<Hit> first_in(double a, double ha, double b, double hb) {
    if (!may_cross(a, ha, b, hb)) return std::nullopt;
    if (b - a <= t_tol) {
      if (hb >= threshold) return Hit{b, b - a};
      ++unresolved;
      return std::nullopt;
    }
    const double m = 0.5 * (a + b);
    const double hm = eval(m);
    if (auto left = first_in(a, ha, m, hm)) return left;
    return first_in(m, hm, b, hb);
  }
};

}  // namespace detail

/// Smallest t in (0, horizon] with D(rho, rho(t)) >= eps, located to within
/// t_tol. The orbit is scanned on a grid; every grid cell is bisected when
/// its right end crosses, and for monitors with a Lipschitz constant also
/// when the constant cannot rule out an interior crossing.
inline TauResult solve_tau(const DensityMatrix& rho, const Hamiltonian& h,
                           const DistinguishabilityMeasure& measure, double eps,
                           const TauOptions& options = {},
                           const Tolerances& tol = default_tolerances()) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw Error(ErrorKind::InvalidEpsilon, "solve_tau: eps must be positive and finite");
  if (options.horizon && !(*options.horizon > 0.0 && std::isfinite(*options.horizon)))
    throw Error(ErrorKind::InvalidHorizon, "solve_tau: horizon must be positive and finite");
  if (!(options.t_tol > 0.0))
    throw Error(ErrorKind::InvalidArgument, "solve_tau: t_tol must be positive");
  require_matching(rho, h, "solve_tau");

  TauResult result;
  result.epsilon = eps;
  result.measure = measure;

  const std::optional<double> horizon = options.horizon ? options.horizon : default_horizon(rho, h, tol);
  if (!horizon) return result;  // stationary: dE = 0
  result.horizon = *horizon;

  const OrbitEvaluator orbit(rho, h, measure, tol);
  const auto monitor = orbit.monitor(eps);
  result.lipschitz_certified = monitor.lipschitz.has_value();

  double step = *horizon / 2000.0;
  if (measure.kind() == DistinguishabilityMeasure::Kind::TraceDistance ||
      measure.kind() == DistinguishabilityMeasure::Kind::Perp) {
    step = *horizon / 1000.0;
    const double speed = *monitor.lipschitz;
    if (speed > tol.zero_denominator) step = std::min(monitor.threshold / (2.0 * speed), step);
  }
  if (options.grid_step) step = *options.grid_step;
  result.grid_step = step;

  detail::CrossingSearch search{orbit, monitor.threshold, monitor.lipschitz, options.t_tol};
  if (search.lipschitz) *search.lipschitz *= 1.0 + 1e-12;

  double a = 0.0;
  double ha = search.eval(0.0);
  const auto cells = static_cast<long>(std::ceil(*horizon / step));
  for (long i = 1; i <= cells; ++i) {
    const double b = i == cells ? *horizon : static_cast<double>(i) * step;
    const double hb = search.eval(b);
    if (auto hit = search.first_in(a, ha, b, hb)) {
      result.status = TauStatus::Reached;
      result.t_star = hit->t;
      result.bracket_width = hit->width;
      break;
    }
    a = b;
    ha = hb;
  }
  result.evaluations = search.evaluations;
  result.unresolved_intervals = search.unresolved;
  return result;
}

/// 1 / t_star, or 0 when nothing was reached within the horizon.
inline double speed(const TauResult& tau) { return tau.reached() ? 1.0 / tau.t_star : 0.0; }

/// eps / t_star variant.
inline double scaled_speed(const TauResult& tau) { return tau.reached() ? tau.epsilon / tau.t_star : 0.0; }

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// F_H against the forward difference ||rho - rho(delta)||_1 / delta.
inline IdentityCheck instantaneous_speed_check(const DensityMatrix& rho, const Hamiltonian& h, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "instantaneous_speed_check: delta must be > 0");
  const ComplexMatrix u = h.propagator(delta);
  const ComplexMatrix moved = u * rho.matrix() * u.adjoint();
  return {f_measure(rho, h), trace_norm_hermitian(rho.matrix() - moved) / delta};
}

/// S_H against (1/4) of the central second difference of
/// t -> D_1/2(rho, rho(t)) at t = 0.
inline IdentityCheck instantaneous_acceleration_check(const DensityMatrix& rho, const Hamiltonian& h,
                                                      double delta) {
  if (!(delta > 0.0))
    throw Error(ErrorKind::InvalidArgument, "instantaneous_acceleration_check: delta must be > 0");
  const ExtendedReal forward = renyi_relative_entropy(rho, evolve(rho, h, delta), 0.5);
  const ExtendedReal backward = renyi_relative_entropy(rho, evolve(rho, h, -delta), 0.5);
  // D at t = 0 is zero
  const double second = (forward.as_double() + backward.as_double()) / (delta * delta);
  return {skew_information(rho, h), 0.25 * second};
}

struct OrbitSample {
  std::vector<double> times;
  std::vector<ExtendedReal> values;
};

inline OrbitSample orbit_scan(const DensityMatrix& rho, const Hamiltonian& h,
                              const DistinguishabilityMeasure& measure, const std::vector<double>& times,
                              const Tolerances& tol = default_tolerances()) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || !std::isfinite(times[i]) || (i > 0 && times[i] < times[i - 1]))
      throw Error(ErrorKind::InvalidArgument, "orbit_scan: times must be finite, nonnegative and ascending");
  }
  const OrbitEvaluator orbit(rho, h, measure, tol);
  OrbitSample out;
  out.times = times;
  out.values.reserve(times.size());
  for (double t : times) out.values.push_back(orbit(t));
  return out;
}

}  // namespace qsl
