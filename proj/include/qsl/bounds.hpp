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

// Quantum speed limits: lower bounds on orbit times compared against the
// solved times.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qsl/asymmetry.hpp"
#include "qsl/config.hpp"
#include "qsl/distinguishability.hpp"
#include "qsl/error.hpp"
#include "qsl/evolution.hpp"
#include "qsl/extended_real.hpp"
#include "qsl/states.hpp"

namespace qsl {

/// Mandelstam-Tamm: pi / (2 dE).
inline ExtendedReal mt_bound(const DensityMatrix& rho, const Hamiltonian& h,
                             const Tolerances& tol = default_tolerances()) {
  return ratio_or_infinity(std::numbers::pi, 2.0 * energy_stats(rho, h, tol).deviation, tol.zero_denominator);
}

/// Margolus-Levitin: pi / (2 A_min).
inline ExtendedReal ml_bound(const DensityMatrix& rho, const Hamiltonian& h,
                             const Tolerances& tol = default_tolerances()) {
  return ratio_or_infinity(std::numbers::pi, 2.0 * a_min_max(rho, h, tol).a_min, tol.zero_denominator);
}

/// Margolus-Levitin with H -> -H: pi / (2 A_max).
inline ExtendedReal ml_max_variant(const DensityMatrix& rho, const Hamiltonian& h,
                                   const Tolerances& tol = default_tolerances()) {
  return ratio_or_infinity(std::numbers::pi, 2.0 * a_min_max(rho, h, tol).a_max, tol.zero_denominator);
}

/// Trace-distance bound eps / F_H, eps in (0, 2].
inline ExtendedReal l1_bound(const DensityMatrix& rho, const Hamiltonian& h, double eps,
                             const Tolerances& tol = default_tolerances()) {
  if (!(eps > 0.0 && eps <= 2.0)) throw Error(ErrorKind::InvalidEpsilon, "l1_bound: eps must lie in (0, 2]");
  return ratio_or_infinity(eps, f_measure(rho, h), tol.zero_denominator);
}

/// Renyi-1/2 bound sqrt(1 - e^{-eps/2}) / sqrt(S_H).
inline ExtendedReal renyi_bound(const DensityMatrix& rho, const Hamiltonian& h, double eps,
                                const Tolerances& tol = default_tolerances()) {
  if (!(eps > 0.0) || std::isnan(eps)) throw Error(ErrorKind::InvalidEpsilon, "renyi_bound: eps must be positive");
  const double numerator = std::sqrt(-std::expm1(-0.5 * eps));
  return ratio_or_infinity(numerator, std::sqrt(skew_information(rho, h)), tol.zero_denominator);
}

/// Infinity proxy for the Renyi divergence when comparing with tau_perp.
inline constexpr double kRenyiInfinityProxy = 80.0;

struct BoundSettings {
  double l1_epsilon = 1.0;
  double renyi_epsilon = 2.0;
  TauOptions tau;
  /// A bound counts as violated only above t_star + slack. tau_perp itself
  /// sits up to 2 sqrt(tol.perp) before the exact orthogonality time.
  double violation_slack = 1e-5;
};

/// bound / t_star, or nullopt when either side is infinite.
inline std::optional<double> tightness(const ExtendedReal& bound, const TauResult& tau) {
  if (bound.is_infinite() || !tau.reached()) return std::nullopt;
  return bound.value() / tau.t_star;
}

struct BoundReport {
  TauResult tau_perp;   // trace distance, eps = 2 - tol.perp
  TauResult tau_l1;     // trace distance, eps = l1_epsilon
  TauResult tau_renyi;  // Renyi 1/2, eps = renyi_epsilon
  ExtendedReal mt;
  ExtendedReal ml;
  ExtendedReal ml_max;
  ExtendedReal l1;
  ExtendedReal renyi;
  double energy_deviation = 0.0;
  double f_h = 0.0;
  double s_h = 0.0;
  double purity = 0.0;
  Eigen::Index dim = 0;
  std::optional<double> mt_ratio, ml_ratio, ml_max_ratio, l1_ratio, renyi_ratio;
  /// Names of bounds exceeding their solved time by more than the slack.
  std::vector<std::string> violations;
  Tolerances tolerances;
};

inline BoundReport bound_report(const DensityMatrix& rho, const Hamiltonian& h, const BoundSettings& settings = {},
                                const Tolerances& tol = default_tolerances()) {
  BoundReport r;
  r.tolerances = tol;
  r.dim = rho.dim();
  r.purity = rho.purity();
  r.energy_deviation = energy_stats(rho, h, tol).deviation;
  r.f_h = f_measure(rho, h);
  r.s_h = skew_information(rho, h);

  r.mt = mt_bound(rho, h, tol);
  r.ml = ml_bound(rho, h, tol);
  r.ml_max = ml_max_variant(rho, h, tol);
  r.l1 = l1_bound(rho, h, settings.l1_epsilon, tol);
  r.renyi = renyi_bound(rho, h, settings.renyi_epsilon, tol);

  r.tau_perp = solve_tau(rho, h, DistinguishabilityMeasure::trace(), 2.0 - tol.perp, settings.tau, tol);
  r.tau_l1 = solve_tau(rho, h, DistinguishabilityMeasure::trace(), settings.l1_epsilon, settings.tau, tol);
  r.tau_renyi = solve_tau(rho, h, DistinguishabilityMeasure::renyi(0.5), settings.renyi_epsilon, settings.tau, tol);

  r.mt_ratio = tightness(r.mt, r.tau_perp);
  r.ml_ratio = tightness(r.ml, r.tau_perp);
  r.ml_max_ratio = tightness(r.ml_max, r.tau_perp);
  r.l1_ratio = tightness(r.l1, r.tau_l1);
  r.renyi_ratio = tightness(r.renyi, r.tau_renyi);

  const auto check = [&](const char* name, const ExtendedReal& bound, const TauResult& tau) {
    if (bound.is_finite() && tau.reached() && bound.value() > tau.t_star + settings.violation_slack)
      r.violations.emplace_back(name);
  };
  check("mt", r.mt, r.tau_perp);
  check("ml", r.ml, r.tau_perp);
  check("ml_max", r.ml_max, r.tau_perp);
  check("l1", r.l1, r.tau_l1);
  check("renyi", r.renyi, r.tau_renyi);
  return r;
}

}  // namespace qsl
