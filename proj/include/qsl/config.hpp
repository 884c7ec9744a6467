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

namespace qsl {

/// Numerical thresholds shared by every module. Reports echo the record
/// they were computed with.
struct Tolerances {
  /// Max |A - A^dag| entry relative to max |A| entry.
  double herm = 1e-10;
  /// Eigenvalues with |lambda| <= clamp * max(1, ||A||) are zero for powers.
  double clamp = 1e-12;
  /// Smallest admissible density-matrix eigenvalue before rejection.
  double positivity = 1e-10;
  /// |tr rho - 1| bound.
  double trace = 1e-10;
  /// Population above which an energy level counts as occupied.
  double support = 1e-10;
  /// Relative gap under which two Hamiltonian eigenvalues are one level.
  double gap = 1e-9;
  /// ||[H, rho]||_1 below which a state is incoherent.
  double incoherent = 1e-10;
  /// Completeness residual of a Kraus set.
  double completeness = 1e-9;
  /// Denominators at or below this give an infinite bound.
  double zero_denominator = 1e-12;
  /// Overlap tr(rho^s sigma^(1-s)) at or below this counts as exactly zero.
  double zero_overlap = 1e-14;
  /// Trace-distance slack defining perfect distinguishability (eps = 2 - perp).
  double perp = 1e-12;
  /// Slack on D(rho, rho(t*)) >= eps accepted at a reported crossing.
  double crossing = 1e-9;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tolerances{};
  return tolerances;
}

}  // namespace qsl
