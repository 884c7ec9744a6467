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

// qsl: command-line front end for the speed-limit and asymmetry toolkit.
//
// Exit codes: 0 success, 1 I/O failure, 2 parse error, 3 validation error,
// 4 property violation.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsl/io.hpp"
#include "qsl/qsl.hpp"
#include "qsl/suite.hpp"

namespace {

using qsl::io::Json;

constexpr int kExitIo = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitViolation = 4;

struct Common {
  std::string input;
  std::string config;
  std::vector<std::string> tol_overrides;
  std::string format = "json";
  std::string out;
};

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw qsl::Error(qsl::ErrorKind::InvalidArgument, "bad number '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

qsl::Tolerances effective_tolerances(const Common& c) {
  qsl::Tolerances tol = qsl::default_tolerances();
  if (!c.config.empty()) {
    const Json cfg = qsl::io::read_json_file(c.config);
    if (cfg.contains("tolerances")) tol = qsl::io::tolerances_from_json(cfg.at("tolerances"), tol);
  }
  for (const auto& item : c.tol_overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--tol expects name=value, got '" + item + "'");
    const auto value = parse_number_list(item.substr(eq + 1));
    if (value.size() != 1) throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--tol expects one value");
    qsl::io::set_tolerance(tol, item.substr(0, eq), value.front());
  }
  return tol;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    qsl::io::write_file(c.out, text);
  }
}

void require_format(const Common& c) {
  if (c.format != "json" && c.format != "csv")
    throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--format must be json or csv");
}

qsl::io::Problem load_problem(const Common& c, const qsl::Tolerances& tol) {
  if (c.input.empty()) throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--input is required");
  return qsl::io::validate_problem(qsl::io::problem_from_json(qsl::io::read_json_file(c.input)), tol);
}

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
  if (with_input) cmd->add_option("--input", c.input, "problem file (JSON)");
  cmd->add_option("--config", c.config, "JSON config with a \"tolerances\" object");
  cmd->add_option("--tol", c.tol_overrides, "tolerance override name=value (repeatable)");
  cmd->add_option("--format", c.format, "json or csv");
  cmd->add_option("--out", c.out, "output path (default stdout)");
}

struct TauFlags {
  std::string measure = "trace";
  std::optional<double> epsilon;
  std::optional<double> horizon;
  double t_tol = 1e-6;
};

qsl::TauOptions tau_options(const TauFlags& f) {
  qsl::TauOptions o;
  o.horizon = f.horizon;
  o.t_tol = f.t_tol;
  return o;
}

int run_measures(const Common& c, const std::string& orders) {
  require_format(c);
  const auto tol = effective_tolerances(c);
  const auto p = load_problem(c, tol);
  const auto report = qsl::measure_report(p.state, p.hamiltonian, parse_number_list(orders), tol);
  emit(c, c.format == "csv" ? qsl::io::to_csv(report) : qsl::io::dump(qsl::io::to_json(report)));
  return 0;
}

int run_tau(const Common& c, const TauFlags& f) {
  require_format(c);
  const auto tol = effective_tolerances(c);
  const auto p = load_problem(c, tol);
  if (!f.epsilon) throw qsl::Error(qsl::ErrorKind::InvalidEpsilon, "--epsilon is required");
  const auto measure = qsl::DistinguishabilityMeasure::parse(f.measure);
  const auto tau = qsl::solve_tau(p.state, p.hamiltonian, measure, *f.epsilon, tau_options(f), tol);
  if (c.format == "csv") {
    emit(c, qsl::io::tau_csv(tau));
  } else {
    Json j = qsl::io::to_json(tau);
    j["t_tol"] = f.t_tol;
    j["tolerances"] = qsl::io::to_json(tol);
    emit(c, qsl::io::dump(j));
  }
  return 0;
}

int run_bounds(const Common& c, const TauFlags& f, double renyi_eps) {
  require_format(c);
  const auto tol = effective_tolerances(c);
  const auto p = load_problem(c, tol);
  qsl::BoundSettings settings;
  settings.l1_epsilon = f.epsilon.value_or(1.0);
  settings.renyi_epsilon = renyi_eps;
  settings.tau = tau_options(f);
  const auto report = qsl::bound_report(p.state, p.hamiltonian, settings, tol);
  if (c.format == "csv") {
    const auto file = qsl::io::problem_from_json(qsl::io::read_json_file(c.input));
    emit(c, std::string(qsl::io::bound_csv_header()) + "\n" +
                qsl::io::bound_csv_row(file.name.value_or("input"), report));
  } else {
    emit(c, qsl::io::dump(qsl::io::to_json(report)));
  }
  return 0;
}

int run_orbit(const Common& c, const std::string& measure_text, double tmax, long steps) {
  const auto tol = effective_tolerances(c);
  const auto p = load_problem(c, tol);
  if (steps < 2) throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--steps must be >= 2");
  if (!(tmax > 0.0)) throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--tmax must be positive");
  std::vector<double> times;
  for (long i = 0; i < steps; ++i)
    times.push_back(tmax * static_cast<double>(i) / static_cast<double>(steps - 1));
  const auto sample = qsl::orbit_scan(p.state, p.hamiltonian, qsl::DistinguishabilityMeasure::parse(measure_text),
                                      times, tol);
  emit(c, qsl::io::orbit_csv(sample));
  return 0;
}

int run_channel_random(const Common& c, const std::string& hamiltonian_path, const std::string& dims_text,
                       std::uint64_t seed, long env_index) {
  const auto tol = effective_tolerances(c);
  if (c.out.empty()) throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--out prefix is required");
  std::optional<qsl::Hamiltonian> given;
  if (!hamiltonian_path.empty())
    given = qsl::io::hamiltonian_from_json(qsl::io::read_json_file(hamiltonian_path), tol);
  // without --dims: system dimension from the Hamiltonian file (or 2), environment of equal size
  const auto dims = dims_text.empty() ? std::vector<double>{given ? static_cast<double>(given->dim()) : 2.0}
                                      : parse_number_list(dims_text);
  if (dims.empty() || dims.size() > 2) throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--dims expects N or N,M");
  const auto sys_dim = static_cast<Eigen::Index>(dims[0]);
  const auto env_dim = static_cast<Eigen::Index>(dims.size() == 2 ? dims[1] : dims[0]);
  if (sys_dim < 2 || env_dim < 2 || dims[0] != static_cast<double>(sys_dim) ||
      dims.back() != static_cast<double>(env_dim))
    throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--dims entries must be integers >= 2");

  qsl::Rng rng = qsl::substream(seed, 0xC0FFEE);
  const qsl::Hamiltonian h_sys = given ? *given : qsl::random_integer_hamiltonian(sys_dim, rng);
  if (h_sys.dim() != sys_dim)
    throw qsl::Error(qsl::ErrorKind::DimensionMismatch, "--dims does not match the Hamiltonian dimension");
  const qsl::Hamiltonian h_env = qsl::random_integer_hamiltonian(env_dim, rng);

  const auto dil = qsl::random_energy_conserving_unitary(h_sys, h_env, seed, env_index, tol);
  const auto channel = qsl::dilation_to_channel(dil, h_sys, tol);

  Json metadata = {{"seed", seed},
                   {"completeness_residual", channel.completeness_residual()},
                   {"harmonic_residual", qsl::harmonic_residual(channel, h_sys)},
                   {"energy_conservation_residual", qsl::energy_conservation_residual(dil, h_sys)},
                   {"block_sizes", dil.block_sizes}};
  Json channel_json = qsl::io::to_json(channel);
  channel_json["metadata"] = metadata;
  qsl::io::write_file(c.out + ".channel.json", qsl::io::dump(channel_json));
  qsl::io::write_file(c.out + ".dilation.json", qsl::io::dump(qsl::io::to_json(dil)));
  qsl::io::write_file(c.out + ".hamiltonian.json",
                      qsl::io::dump(Json{{"hamiltonian", qsl::io::to_json(h_sys.matrix())}}));
  metadata["files"] = {c.out + ".channel.json", c.out + ".dilation.json", c.out + ".hamiltonian.json"};
  std::cout << qsl::io::dump(metadata);
  return 0;
}

int run_channel_verify(const Common& c, const std::string& channel_path, const std::string& hamiltonian_path,
                       bool strict) {
  const auto tol = effective_tolerances(c);
  if (channel_path.empty() || hamiltonian_path.empty())
    throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--channel and --hamiltonian are required");
  const auto channel = qsl::io::channel_from_json(qsl::io::read_json_file(channel_path), tol);
  const auto h = qsl::io::hamiltonian_from_json(qsl::io::read_json_file(hamiltonian_path), tol);

  constexpr double kCovariance = 1e-8, kHarmonic = 1e-8, kIncoherence = 1e-9;
  const auto verdict = [](double r, double limit) { return r <= limit ? "PASS" : "FAIL"; };
  Json checks = Json::object();
  bool all_pass = true;
  const auto add = [&](const char* name, double residual, double limit) {
    checks[name] = {{"residual", residual}, {"threshold", limit}, {"result", verdict(residual, limit)}};
    all_pass = all_pass && residual <= limit;
  };
  add("completeness", channel.completeness_residual(), tol.completeness);
  add("covariance", qsl::verify_ti(channel, h), kCovariance);
  if (channel.omegas()) add("harmonic_kraus", qsl::harmonic_residual(channel, h), kHarmonic);
  add("incoherence", qsl::incoherence_residual(channel, h), kIncoherence);
  emit(c, qsl::io::dump(Json{{"checks", checks},
                             {"certified", channel.omegas().has_value()},
                             {"all_pass", all_pass},
                             {"tolerances", qsl::io::to_json(tol)}}));
  return strict && !all_pass ? kExitViolation : 0;
}

int run_suite(const Common& c, std::uint64_t seed, long trials, const std::string& dims_text, bool inject) {
  require_format(c);
  qsl::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.inject_non_ti = inject;
  const auto dims = parse_number_list(dims_text);
  if (dims.empty() || dims.size() > 2) throw qsl::Error(qsl::ErrorKind::InvalidArgument, "--dims expects N or MIN,MAX");
  cfg.min_dim = static_cast<Eigen::Index>(dims.front());
  cfg.max_dim = static_cast<Eigen::Index>(dims.back());
  const auto summary = qsl::run_monotone_suite(cfg);

  if (c.format == "json") {
    Json props = Json::array();
    for (const auto& p : summary.properties)
      props.push_back({{"property", p.name},
                       {"trials", p.trials},
                       {"passes", p.passes},
                       {"worst_excess", p.worst},
                       {"tolerance", p.tolerance},
                       {"result", p.ok() ? "PASS" : "FAIL"}});
    emit(c, qsl::io::dump(Json{{"seed", seed}, {"properties", props}, {"all_pass", summary.ok()}}));
  } else {
    std::string text = "property,trials,passes,worst_excess,tolerance,result\n";
    for (const auto& p : summary.properties)
      text += p.name + "," + std::to_string(p.trials) + "," + std::to_string(p.passes) + "," +
              qsl::io::format_double(p.worst, 6) + "," + qsl::io::format_double(p.tolerance, 3) + "," +
              (p.ok() ? "PASS" : "FAIL") + "\n";
    emit(c, text);
  }
  return summary.ok() ? 0 : kExitViolation;
}

int exit_code_for(qsl::ErrorKind kind) {
  if (kind == qsl::ErrorKind::ParseError) return kExitParse;
  if (kind == qsl::ErrorKind::IOError) return kExitIo;
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum speed limits and time-translation asymmetry"};
  app.require_subcommand(1);

  Common common;
  TauFlags tau_flags;
  std::string orders = "0.5";
  double renyi_eps = 2.0;
  std::string orbit_measure = "trace";
  double tmax = 10.0;
  long steps = 201;
  std::string hamiltonian_path, channel_path, suite_dims = "2,4", channel_dims;
  std::uint64_t seed = 1;
  long env_index = 0;
  long trials = 40;
  bool inject = false, strict = false;

  auto* measures = app.add_subcommand("measures", "asymmetry measures of a state");
  add_common(measures, common);
  measures->add_option("--orders", orders, "comma-separated Dyson skew orders");

  auto* tau = app.add_subcommand("tau", "minimum time to reach distinguishability eps");
  add_common(tau, common);
  tau->add_option("--measure", tau_flags.measure, "trace | renyi:<s> | infidelity | perp");
  tau->add_option("--epsilon", tau_flags.epsilon, "distinguishability threshold");
  tau->add_option("--horizon", tau_flags.horizon, "search horizon (default 50 pi / dE)");
  tau->add_option("--t-tol", tau_flags.t_tol, "bisection tolerance");

  auto* bounds = app.add_subcommand("bounds", "speed-limit bounds against solved times");
  add_common(bounds, common);
  bounds->add_option("--epsilon", tau_flags.epsilon, "trace-distance eps for the l1 bound (default 1)");
  bounds->add_option("--renyi-epsilon", renyi_eps, "Renyi eps (default 2)");
  bounds->add_option("--horizon", tau_flags.horizon, "search horizon");
  bounds->add_option("--t-tol", tau_flags.t_tol, "bisection tolerance");

  auto* orbit = app.add_subcommand("orbit", "sample D(rho, rho(t)) as CSV");
  add_common(orbit, common);
  orbit->add_option("--measure", orbit_measure, "distinguishability measure");
  orbit->add_option("--tmax", tmax, "last sample time");
  orbit->add_option("--steps", steps, "number of samples (>= 2)");

  auto* channel = app.add_subcommand("channel", "TI channel tools");
  channel->require_subcommand(1);
  auto* random = channel->add_subcommand("random", "sample a TI channel from an energy-conserving dilation");
  add_common(random, common, false);
  random->add_option("--hamiltonian", hamiltonian_path, "system Hamiltonian file (default: random)");
  random->add_option("--dims", channel_dims, "N or N,M (system, environment; default from --hamiltonian, else 2)");
  random->add_option("--seed", seed, "seed");
  random->add_option("--env-index", env_index, "initial environment eigenlevel");
  auto* verify = channel->add_subcommand("verify", "certify a channel against a Hamiltonian");
  add_common(verify, common, false);
  verify->add_option("--channel", channel_path, "channel file");
  verify->add_option("--hamiltonian", hamiltonian_path, "Hamiltonian file");
  verify->add_flag("--strict", strict, "exit 4 when any check fails");

  auto* suite = app.add_subcommand("monotone-suite", "randomized monotonicity and convexity checks");
  add_common(suite, common, false);
  suite->add_option("--seed", seed, "seed");
  suite->add_option("--trials", trials, "number of trials");
  suite->add_option("--dims", suite_dims, "N or MIN,MAX (default 2,4)");
  suite->add_flag("--inject-non-ti", inject, "use non-TI channels (must report violations)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*measures) return run_measures(common, orders);
    if (*tau) return run_tau(common, tau_flags);
    if (*bounds) return run_bounds(common, tau_flags, renyi_eps);
    if (*orbit) return run_orbit(common, orbit_measure, tmax, steps);
    if (*random) return run_channel_random(common, hamiltonian_path, channel_dims, seed, env_index);
    if (*verify) return run_channel_verify(common, channel_path, hamiltonian_path, strict);
    if (*suite) return run_suite(common, seed, trials, suite_dims, inject);
  } catch (const qsl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
