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

// Time-translation asymmetry functionals of a state relative to a
// Hamiltonian: energy statistics, F_H = ||[H, rho]||_1, Wigner-Yanase and
// Dyson-Wigner-Yanase skew information, A_min and A_max.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsl/config.hpp"
#include "qsl/distinguishability.hpp"
#include "qsl/error.hpp"
#include "qsl/operator_core.hpp"
#include "qsl/states.hpp"

namespace qsl {

inline void require_matching(const DensityMatrix& rho, const Hamiltonian& h, const char* who) {
  if (rho.dim() != h.dim())
    throw Error(ErrorKind::DimensionMismatch, std::string(who) + ": state dim " +
                                                  std::to_string(rho.dim()) + " vs Hamiltonian dim " +
                                                  std::to_string(h.dim()));
}

struct EnergyStats {
  double mean = 0.0;       // tr(rho H)
  double deviation = 0.0;  // sqrt(tr(rho H^2) - tr(rho H)^2)
  double min_occupied = 0.0;
  double max_occupied = 0.0;
};

/// E_min / E_max are the lowest / highest distinct levels whose population
/// exceeds tol.support.
inline EnergyStats energy_stats(const DensityMatrix& rho, const Hamiltonian& h,
                                const Tolerances& tol = default_tolerances()) {
  require_matching(rho, h, "energy_stats");
  EnergyStats out;
  const ComplexMatrix rh = rho.matrix() * h.matrix();
  out.mean = rh.trace().real();
  const double second = (rh * h.matrix()).trace().real();
  out.deviation = std::sqrt(std::max(0.0, second - out.mean * out.mean));

  const auto pops = level_populations(rho, h);
  std::optional<std::size_t> lo, hi;
  for (std::size_t k = 0; k < pops.size(); ++k) {
    if (pops[k] > tol.support) {
      if (!lo) lo = k;
      hi = k;
    }
  }
  // A unit-trace state always occupies some level; this guards absurd tolerances.
  if (!lo) throw Error(ErrorKind::DomainError, "energy_stats: no occupied level above tol.support");
  out.min_occupied = h.levels()[*lo].energy;
  out.max_occupied = h.levels()[*hi].energy;
  return out;
}

struct AsymmetryExtent {
  double a_min = 0.0;  // E_av - E_min
  double a_max = 0.0;  // E_max - E_av
};

inline AsymmetryExtent a_min_max(const DensityMatrix& rho, const Hamiltonian& h,
                                 const Tolerances& tol = default_tolerances()) {
  const EnergyStats e = energy_stats(rho, h, tol);
  return {e.mean - e.min_occupied, e.max_occupied - e.mean};
}

/// ||[H, rho]||_1.
inline double f_measure(const DensityMatrix& rho, const Hamiltonian& h) {
  require_matching(rho, h, "f_measure");
  return trace_norm(commutator(h.matrix(), rho.matrix()));
}

/// Wigner-Yanase skew information, computed as (1/2)||[H, sqrt(rho)]||_2^2.
inline double skew_information(const DensityMatrix& rho, const Hamiltonian& h) {
  require_matching(rho, h, "skew_information");
  return 0.5 * commutator(h.matrix(), rho.sqrt()).squaredNorm();
}

/// Dyson-Wigner-Yanase skew information |tr([rho^s, H][rho^(1-s), H])|.
///
/// For s in (0, 1) this is -tr([rho^s,H][rho^(1-s),H]). For s in (1, 2] the
/// bare expression is non-positive and the sign is flipped, so the result
/// is always (|1 - s|) times the second time derivative of the order-s
/// Renyi divergence along the orbit at t = 0.
///
/// For s > 1, rho^(1-s) is taken on the support of rho. When rho is rank
/// deficient and H couples its support to its kernel that pseudo-power
/// would drop a divergent contribution, and a SupportError is raised.
inline double dyson_skew(const DensityMatrix& rho, const Hamiltonian& h, double s,
                         const Tolerances& tol = default_tolerances()) {
  require_renyi_order(s, "dyson_skew");
  require_matching(rho, h, "dyson_skew");
  if (s > 1.0 && rho.rank(tol) < rho.dim()) {
    const ComplexMatrix support = support_power(rho.spectrum(), 0.0, tol);
    const ComplexMatrix kernel = identity(rho.dim()) - support;
    const double coupling = (support * h.matrix() * kernel).norm();
    if (coupling > tol.herm * std::max(1.0, h.matrix().norm()))
      throw Error(ErrorKind::SupportError,
                  "dyson_skew: rank-deficient state with support-kernel coupling " + std::to_string(coupling));
  }
  const ComplexMatrix a = commutator(rho.power(s), h.matrix());
  const ComplexMatrix b = commutator(rho.power(1.0 - s), h.matrix());
  const double raw = -(a * b).trace().real();
  return std::max(0.0, s < 1.0 ? raw : -raw);
}

struct MeasureReport {
  double energy_mean = 0.0;
  double energy_deviation = 0.0;
  double energy_min = 0.0;
  double energy_max = 0.0;
  double a_min = 0.0;
  double a_max = 0.0;
  double f_h = 0.0;
  double s_h = 0.0;
  std::vector<std::pair<double, double>> dyson;  // (order, value)
  Tolerances tolerances;
};

/// Full report. Checks F_H <= 2 dE and S_H <= dE^2 on the way out; a
/// violation beyond 1e-9 (relative to the spread of H) is a DomainError.
inline MeasureReport measure_report(const DensityMatrix& rho, const Hamiltonian& h,
                                    const std::vector<double>& orders = {0.5},
                                    const Tolerances& tol = default_tolerances()) {
  MeasureReport r;
  r.tolerances = tol;
  const EnergyStats e = energy_stats(rho, h, tol);
  r.energy_mean = e.mean;
  r.energy_deviation = e.deviation;
  r.energy_min = e.min_occupied;
  r.energy_max = e.max_occupied;
  r.a_min = e.mean - e.min_occupied;
  r.a_max = e.max_occupied - e.mean;
  r.f_h = f_measure(rho, h);
  r.s_h = skew_information(rho, h);
  for (double s : orders) r.dyson.emplace_back(s, dyson_skew(rho, h, s, tol));

  const double scale = std::max(1.0, h.spread());
  if (r.f_h > 2.0 * r.energy_deviation + 1e-9 * scale ||
      r.s_h > r.energy_deviation * r.energy_deviation + 1e-9 * scale * scale ||
      r.a_min < -1e-12 * scale || r.a_max < -1e-12 * scale)
    throw Error(ErrorKind::DomainError, "measure_report: report invariants violated");
  return r;
}

}  // namespace qsl
