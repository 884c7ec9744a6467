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

// Randomized end-to-end checks that asymmetry measures and orbit speeds do
// not increase under TI channels, that speed is quasi-convex, and that
// F_H and S_H are convex.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qsl/asymmetry.hpp"
#include "qsl/channels.hpp"
#include "qsl/evolution.hpp"
#include "qsl/random.hpp"
#include "qsl/states.hpp"

namespace qsl {

struct NamedChannel {
  QuantumChannel channel;
  std::string kind;
};

/// One TI channel for H drawn from: energy-conserving dilation with an
/// environment copying H, dephasing, constant preparation of a random
/// incoherent state, or dilation followed by dephasing.
inline NamedChannel random_ti_channel(const Hamiltonian& h, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<Eigen::Index> start(0, h.dim() - 1);
  const auto dilated = [&] {
    const std::uint64_t seed = rng();
    return dilation_to_channel(random_energy_conserving_unitary(h, h, seed, start(rng)), h);
  };
  switch (pick(rng)) {
    case 0: return {dilated(), "dilation"};
    case 1: return {dephasing_channel(h), "dephasing"};
    case 2: return {constant_channel(random_incoherent_state(h, rng), h), "constant"};
    default: return {compose(dephasing_channel(h), dilated()), "dilation+dephasing"};
  }
}

/// Speed comparison slack: a later time t_out is a violation only if it
/// undercuts the reference time by more than this.
inline constexpr double kTauSlack = 1e-5;

/// true when tau_out >= tau_ref - slack (unreached counts as infinite).
inline bool tau_not_smaller(const TauResult& out, const TauResult& ref, double slack = kTauSlack) {
  if (!out.reached()) return true;
  if (!ref.reached()) return false;
  return out.t_star >= ref.t_star - slack;
}

struct PropertyResult {
  std::string name;
  long trials = 0;
  long passes = 0;
  double worst = 0.0;  // largest excess over the allowed value seen (<= 0 is fine)
  double tolerance = 0.0;

  bool ok() const { return passes == trials; }

  void record(double excess) {
    ++trials;
    if (excess <= tolerance) ++passes;
    if (trials == 1 || excess > worst) worst = excess;
  }
};

struct SuiteConfig {
  std::uint64_t seed = 20160101;
  long trials = 40;
  Eigen::Index min_dim = 2;
  Eigen::Index max_dim = 4;
  /// Replace the TI channel sampler by generic channels fed incoherent
  /// inputs; the monotonicity properties must then report violations.
  bool inject_non_ti = false;
  double trace_epsilon = 0.5;
  double renyi_epsilon = 0.5;
};

struct SuiteSummary {
  std::vector<PropertyResult> properties;
  bool ok() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.ok(); });
  }
};

namespace detail {
// Excess of tau_ref - tau_out over zero; infinities map to +/-1 sentinels.
inline double tau_excess(const TauResult& out, const TauResult& ref) {
  if (!out.reached()) return -1.0;
  if (!ref.reached()) return 1.0;
  return ref.t_star - out.t_star;
}
}  // namespace detail

inline SuiteSummary run_monotone_suite(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorKind::InvalidArgument, "monotone suite: trials must be >= 1");
  if (cfg.min_dim < 2 || cfg.max_dim < cfg.min_dim)
    throw Error(ErrorKind::InvalidArgument, "monotone suite: need 2 <= min_dim <= max_dim");

  PropertyResult f_mono{"ti_monotone_F_H", 0, 0, 0.0, 1e-9};
  PropertyResult s_mono{"ti_monotone_S_H", 0, 0, 0.0, 1e-9};
  PropertyResult speed_trace{"ti_monotone_speed_trace", 0, 0, 0.0, kTauSlack};
  PropertyResult speed_renyi{"ti_monotone_speed_renyi", 0, 0, 0.0, kTauSlack};
  PropertyResult quasi{"speed_quasi_convex", 0, 0, 0.0, kTauSlack};
  PropertyResult f_convex{"convex_F_H", 0, 0, 0.0, 1e-9};
  PropertyResult s_convex{"convex_S_H", 0, 0, 0.0, 1e-9};

  const auto trace = DistinguishabilityMeasure::trace();
  const auto renyi = DistinguishabilityMeasure::renyi(0.5);
  std::uniform_int_distribution<Eigen::Index> dim_pick(cfg.min_dim, cfg.max_dim);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (long trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    const Eigen::Index n = dim_pick(rng);
    const Hamiltonian h = random_hamiltonian(n, rng);

    // Monotonicity under a channel.
    {
      const Eigen::Index rank = 1 + static_cast<Eigen::Index>(unit(rng) * static_cast<double>(n));
      DensityMatrix rho = random_density_matrix(n, rng, std::min(rank, n));
      std::optional<QuantumChannel> channel;
      if (cfg.inject_non_ti) {
        rho = random_incoherent_state(h, rng);
        channel = unitary_channel(haar_unitary(n, rng));
      } else {
        channel = random_ti_channel(h, rng).channel;
      }
      const DensityMatrix out = apply_channel(*channel, rho);
      f_mono.record(f_measure(out, h) - f_measure(rho, h));
      s_mono.record(skew_information(out, h) - skew_information(rho, h));

      TauOptions opts;
      opts.horizon = default_horizon(rho, h);
      if (!opts.horizon) opts.horizon = 100.0;
      speed_trace.record(detail::tau_excess(solve_tau(out, h, trace, cfg.trace_epsilon, opts),
                                            solve_tau(rho, h, trace, cfg.trace_epsilon, opts)));
      speed_renyi.record(detail::tau_excess(solve_tau(out, h, renyi, cfg.renyi_epsilon, opts),
                                            solve_tau(rho, h, renyi, cfg.renyi_epsilon, opts)));
    }

    // Mixing.
    {
      const DensityMatrix a = random_density_matrix(n, rng);
      const DensityMatrix b = random_pure_state(n, rng);
      const double p = unit(rng);
      const DensityMatrix mix = validate_state(p * a.matrix() + (1.0 - p) * b.matrix());
      f_convex.record(f_measure(mix, h) - (p * f_measure(a, h) + (1.0 - p) * f_measure(b, h)));
      s_convex.record(skew_information(mix, h) - (p * skew_information(a, h) + (1.0 - p) * skew_information(b, h)));

      TauOptions opts;
      double horizon = 0.0;
      for (const auto* s : {&a, &b, &mix})
        if (auto hz = default_horizon(*s, h)) horizon = std::max(horizon, *hz);
      opts.horizon = horizon > 0.0 ? horizon : 100.0;
      const TauResult ta = solve_tau(a, h, trace, cfg.trace_epsilon, opts);
      const TauResult tb = solve_tau(b, h, trace, cfg.trace_epsilon, opts);
      const TauResult tm = solve_tau(mix, h, trace, cfg.trace_epsilon, opts);
      const TauResult& earliest = (!ta.reached() || (tb.reached() && tb.t_star < ta.t_star)) ? tb : ta;
      quasi.record(detail::tau_excess(tm, earliest));
    }
  }
  return {{f_mono, s_mono, speed_trace, speed_renyi, quasi, f_convex, s_convex}};
}

}  // namespace qsl
