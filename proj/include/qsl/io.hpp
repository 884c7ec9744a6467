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

// File formats. Complex numbers are [re, im] arrays, matrices row-major
// nested arrays of them. Infinite quantities serialize as the string "inf".
// Doubles are written in the shortest form that parses back to the same
// bits.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsl/asymmetry.hpp"
#include "qsl/bounds.hpp"
#include "qsl/channels.hpp"
#include "qsl/config.hpp"
#include "qsl/error.hpp"
#include "qsl/evolution.hpp"
#include "qsl/extended_real.hpp"
#include "qsl/operator_core.hpp"
#include "qsl/states.hpp"

namespace qsl::io {

using Json = nlohmann::json;

inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::ParseError, "expected a complex number [re, im], got " + j.dump());
}

inline Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw Error(ErrorKind::ParseError, "expected a matrix as a nested array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorKind::ParseError, "matrix rows have unequal length");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

inline Json to_json(const ExtendedReal& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

inline ExtendedReal extended_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtendedReal::infinity();
  if (j.is_number()) return j.get<double>();
  throw Error(ErrorKind::ParseError, "expected a number or \"inf\"");
}

inline Json optional_to_json(const std::optional<double>& x) { return x ? Json(*x) : Json("NA"); }

inline Json to_json(const Tolerances& t) {
  return {{"herm", t.herm},
          {"clamp", t.clamp},
          {"positivity", t.positivity},
          {"trace", t.trace},
          {"support", t.support},
          {"gap", t.gap},
          {"incoherent", t.incoherent},
          {"completeness", t.completeness},
          {"zero_denominator", t.zero_denominator},
          {"zero_overlap", t.zero_overlap},
          {"perp", t.perp},
          {"crossing", t.crossing}};
}

/// Sets one named tolerance; unknown names and non-positive values are rejected.
inline void set_tolerance(Tolerances& t, const std::string& name, double value) {
  if (!(value > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance '" + name + "' must be positive");
  double* slot = nullptr;
  if (name == "herm") slot = &t.herm;
  else if (name == "clamp") slot = &t.clamp;
  else if (name == "positivity") slot = &t.positivity;
  else if (name == "trace") slot = &t.trace;
  else if (name == "support") slot = &t.support;
  else if (name == "gap") slot = &t.gap;
  else if (name == "incoherent") slot = &t.incoherent;
  else if (name == "completeness") slot = &t.completeness;
  else if (name == "zero_denominator") slot = &t.zero_denominator;
  else if (name == "zero_overlap") slot = &t.zero_overlap;
  else if (name == "perp") slot = &t.perp;
  else if (name == "crossing") slot = &t.crossing;
  if (!slot) throw Error(ErrorKind::InvalidArgument, "unknown tolerance '" + name + "'");
  *slot = value;
}

inline Tolerances tolerances_from_json(const Json& j, Tolerances base = default_tolerances()) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "tolerances must be an object");
  for (const auto& [name, value] : j.items()) {
    if (!value.is_number()) throw Error(ErrorKind::ParseError, "tolerance '" + name + "' is not a number");
    set_tolerance(base, name, value.get<double>());
  }
  return base;
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IOError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IOError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IOError, "write failed for '" + path + "'");
}

inline Json read_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

// ---------------------------------------------------------------- problems

struct ProblemFile {
  ComplexMatrix hamiltonian;
  ComplexMatrix state;
  std::optional<CompositeLabel> composite;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

inline ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("hamiltonian") || !j.contains("state"))
    throw Error(ErrorKind::ParseError, "problem file needs \"hamiltonian\" and \"state\"");
  ProblemFile p;
  p.hamiltonian = matrix_from_json(j.at("hamiltonian"));
  p.state = matrix_from_json(j.at("state"));
  if (j.contains("composite")) {
    CompositeLabel label;
    for (const auto& d : j.at("composite")) {
      if (!d.is_number_integer() || d.get<long long>() < 1)
        throw Error(ErrorKind::ParseError, "composite dims must be positive integers");
      label.dims.push_back(d.get<Eigen::Index>());
    }
    p.composite = std::move(label);
  }
  if (j.contains("name")) p.name = j.at("name").get<std::string>();
  if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

inline Json to_json(const ProblemFile& p) {
  Json j = {{"hamiltonian", to_json(p.hamiltonian)}, {"state", to_json(p.state)}};
  if (p.composite) j["composite"] = p.composite->dims;
  if (p.name) j["name"] = *p.name;
  if (p.seed) j["seed"] = *p.seed;
  return j;
}

/// Validated (state, Hamiltonian) pair of a problem file.
struct Problem {
  Hamiltonian hamiltonian;
  DensityMatrix state;
};

inline Problem validate_problem(const ProblemFile& p, const Tolerances& tol = default_tolerances()) {
  Hamiltonian h(p.hamiltonian, tol);
  DensityMatrix rho = validate_state(p.state, tol);
  if (rho.dim() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "problem: state and Hamiltonian dims differ");
  if (p.composite && p.composite->total() != h.dim())
    throw Error(ErrorKind::DimensionMismatch, "problem: composite label does not match dimension");
  return {std::move(h), std::move(rho)};
}

// ---------------------------------------------------------------- channels

inline Json to_json(const QuantumChannel& c) {
  Json kraus = Json::array();
  for (const auto& k : c.kraus()) kraus.push_back(to_json(k));
  Json j = {{"kraus", std::move(kraus)}};
  if (c.omegas()) j["omega"] = *c.omegas();
  return j;
}

inline QuantumChannel channel_from_json(const Json& j, const Tolerances& tol = default_tolerances()) {
  if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array())
    throw Error(ErrorKind::ParseError, "channel file needs a \"kraus\" array");
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  std::optional<std::vector<double>> omegas;
  if (j.contains("omega")) {
    omegas.emplace();
    for (const auto& w : j.at("omega")) {
      if (!w.is_number()) throw Error(ErrorKind::ParseError, "omega entries must be numbers");
      omegas->push_back(w.get<double>());
    }
  }
  return QuantumChannel(std::move(kraus), std::move(omegas), tol);
}

inline Json to_json(const StinespringDilation& d) {
  return {{"env_hamiltonian", to_json(d.env_hamiltonian.matrix())},
          {"unitary", to_json(d.unitary)},
          {"env_initial_index", d.env_initial_index},
          {"block_sizes", d.block_sizes}};
}

inline StinespringDilation dilation_from_json(const Json& j, const Tolerances& tol = default_tolerances()) {
  if (!j.is_object() || !j.contains("env_hamiltonian") || !j.contains("unitary") ||
      !j.contains("env_initial_index"))
    throw Error(ErrorKind::ParseError, "dilation file needs env_hamiltonian, unitary, env_initial_index");
  if (!j.at("env_initial_index").is_number_integer())
    throw Error(ErrorKind::ParseError, "env_initial_index must be an integer");
  StinespringDilation d{Hamiltonian(matrix_from_json(j.at("env_hamiltonian")), tol),
                        matrix_from_json(j.at("unitary")), j.at("env_initial_index").get<Eigen::Index>(), {}};
  if (j.contains("block_sizes")) d.block_sizes = j.at("block_sizes").get<std::vector<Eigen::Index>>();
  return d;
}

/// Hamiltonian from {"hamiltonian": matrix} (a problem file works) or a bare matrix.
inline Hamiltonian hamiltonian_from_json(const Json& j, const Tolerances& tol = default_tolerances()) {
  if (j.is_object() && j.contains("hamiltonian")) return Hamiltonian(matrix_from_json(j.at("hamiltonian")), tol);
  if (j.is_array()) return Hamiltonian(matrix_from_json(j), tol);
  throw Error(ErrorKind::ParseError, "expected a Hamiltonian matrix or an object with \"hamiltonian\"");
}

// ---------------------------------------------------------------- reports

inline Json to_json(const MeasureReport& r) {
  Json dyson = Json::array();
  for (const auto& [s, v] : r.dyson) dyson.push_back({{"s", s}, {"value", v}});
  return {{"dE", r.energy_deviation}, {"E_av", r.energy_mean},  {"E_min", r.energy_min},
          {"E_max", r.energy_max},    {"A_min", r.a_min},       {"A_max", r.a_max},
          {"F_H", r.f_h},             {"S_H", r.s_h},           {"S_H_dyson", std::move(dyson)},
          {"tolerances", to_json(r.tolerances)}};
}

inline const char* measure_csv_header() { return "dE,E_av,E_min,E_max,A_min,A_max,F_H,S_H"; }

inline std::string format_double(double x, int digits = 17) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

inline std::string format_extended(const ExtendedReal& x) { return x.to_string(); }

inline std::string format_optional(const std::optional<double>& x) { return x ? format_double(*x) : "NA"; }

inline std::string to_csv(const MeasureReport& r) {
  std::string out = measure_csv_header();
  for (const auto& [s, v] : r.dyson) out += ",dyson_" + format_double(s);
  out += "\n";
  for (double x : {r.energy_deviation, r.energy_mean, r.energy_min, r.energy_max, r.a_min, r.a_max, r.f_h, r.s_h})
    out += format_double(x) + ",";
  for (const auto& [s, v] : r.dyson) out += format_double(v) + ",";
  out.back() = '\n';
  return out;
}

inline Json to_json(const TauResult& t) {
  return {{"status", to_string(t.status)},
          {"t_star", t.reached() ? Json(t.t_star) : Json(nullptr)},
          {"tau", to_json(t.tau())},
          {"speed", speed(t)},
          {"scaled_speed", scaled_speed(t)},
          {"horizon_limited", !t.reached()},
          {"bracket_width", t.bracket_width},
          {"epsilon", t.epsilon},
          {"measure", t.measure.to_string()},
          {"horizon", t.horizon},
          {"grid_step", t.grid_step},
          {"lipschitz_certified", t.lipschitz_certified},
          {"evaluations", t.evaluations},
          {"unresolved_intervals", t.unresolved_intervals}};
}

inline std::string tau_csv(const TauResult& t) {
  return "status,t_star,bracket_width,epsilon,measure,horizon,speed\n" + std::string(to_string(t.status)) + "," +
         (t.reached() ? format_double(t.t_star) : std::string("inf")) + "," + format_double(t.bracket_width) + "," +
         format_double(t.epsilon) + "," + t.measure.to_string() + "," + format_double(t.horizon) + "," +
         format_double(speed(t)) + "\n";
}

inline Json to_json(const BoundReport& r) {
  Json violations = r.violations;
  return {{"dim", r.dim},
          {"purity", r.purity},
          {"dE", r.energy_deviation},
          {"F_H", r.f_h},
          {"S_H", r.s_h},
          {"bounds",
           {{"mt", to_json(r.mt)},
            {"ml", to_json(r.ml)},
            {"ml_max", to_json(r.ml_max)},
            {"l1", to_json(r.l1)},
            {"renyi", to_json(r.renyi)}}},
          {"tau_perp", to_json(r.tau_perp)},
          {"tau_l1", to_json(r.tau_l1)},
          {"tau_renyi", to_json(r.tau_renyi)},
          {"tightness",
           {{"mt", optional_to_json(r.mt_ratio)},
            {"ml", optional_to_json(r.ml_ratio)},
            {"ml_max", optional_to_json(r.ml_max_ratio)},
            {"l1", optional_to_json(r.l1_ratio)},
            {"renyi", optional_to_json(r.renyi_ratio)}}},
          {"violations", std::move(violations)},
          {"tolerances", to_json(r.tolerances)}};
}

inline const char* bound_csv_header() {
  return "state_id,dim,purity,dE,F_H,S_H,tau,mt,ml,l1,renyi,ml_max,tau_l1,tau_renyi,"
         "mt_ratio,ml_ratio,ml_max_ratio,l1_ratio,renyi_ratio";
}

inline std::string bound_csv_row(const std::string& state_id, const BoundReport& r) {
  std::string row = state_id + "," + std::to_string(r.dim);
  for (double x : {r.purity, r.energy_deviation, r.f_h, r.s_h}) row += "," + format_double(x);
  row += "," + format_extended(r.tau_perp.tau());
  for (const auto* b : {&r.mt, &r.ml, &r.l1, &r.renyi, &r.ml_max}) row += "," + format_extended(*b);
  row += "," + format_extended(r.tau_l1.tau()) + "," + format_extended(r.tau_renyi.tau());
  for (const auto* q : {&r.mt_ratio, &r.ml_ratio, &r.ml_max_ratio, &r.l1_ratio, &r.renyi_ratio})
    row += "," + format_optional(*q);
  return row + "\n";
}

/// Orbit samples as "t,D" rows with 17 significant digits.
inline std::string orbit_csv(const OrbitSample& s) {
  std::string out = "t,D\n";
  for (std::size_t i = 0; i < s.times.size(); ++i)
    out += format_double(s.times[i]) + "," + format_extended(s.values[i]) + "\n";
  return out;
}

/// Dump with two-space indentation and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qsl::io
