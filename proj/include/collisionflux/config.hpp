// Copyright 2026 The collisionflux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLLISIONFLUX_CONFIG_HPP_
#define COLLISIONFLUX_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cflux {

// Physical parameters of the chain + environment model. All quantities are
// dimensionless (hbar = kB = 1, energies in units of the qubit frequency).
struct ModelConfig {
  double omega = 1.0;  // shared transition frequency of every qubit
  double g12 = 0.0;    // S1-S2 exchange coupling
  double g23 = 0.0;    // S2-S3 exchange coupling
  double gh = 7.5;     // hot-bath collision coupling
  double gc = 7.5;     // cold-bath collision coupling
  double ga = 0.0;     // S2-A dephasing coupling
  double gb = 0.0;     // A-B exchange coupling
  double tc = 0.01;    // collision duration
  double Th = 10.0;    // hot-bath temperature
  double Tc = 1.0;     // cold-bath temperature
  double p = 0.0;      // coherence weight of the B-ancilla stream, in [0,1]

  bool operator==(const ModelConfig&) const = default;
};

// Steady-state detector: the run is declared steady once
// |J_n - J_{n-1}| <= rel_tol * max(|J_n|, 1e-15)
// has held for `window` consecutive rounds.
struct SteadyCriterion {
  double rel_tol = 1e-8;
  std::int64_t window = 100;
  std::int64_t max_rounds = 1000000;

  bool operator==(const SteadyCriterion&) const = default;
};

// One sweep axis: `count` evenly spaced values from min to max inclusive.
// count == 1 requires min == max.
struct AxisSpec {
  std::string name;  // one of: ga, gb, p, g12, g23, Th, Tc
  double min = 0.0;
  double max = 0.0;
  std::int64_t count = 0;

  bool operator==(const AxisSpec&) const = default;
};

struct SweepSpec {
  ModelConfig base;
  AxisSpec axis1;
  AxisSpec axis2;
  SteadyCriterion criterion;

  bool operator==(const SweepSpec&) const = default;
};

// A single-run configuration: flat ModelConfig fields plus an optional
// nested "criterion" object and an optional "stride" (trajectory recording
// stride, >= 1).
struct RunConfig {
  ModelConfig model;
  SteadyCriterion criterion;
  std::int64_t stride = 1;

  bool operator==(const RunConfig&) const = default;
};

// Parsing accepts either the bare configuration object or a manifest
// produced by this tool (an object with "config" and "meta" keys), in which
// case the embedded config is used — so a manifest can be re-run as-is.
// Unknown fields are a hard error. Throws config_error with the offending
// field named.
RunConfig parse_run_config(const std::string& json_text);
SweepSpec parse_sweep_config(const std::string& json_text);

// Canonical JSON serialization; parse(serialize(x)) == x exactly.
std::string serialize(const RunConfig& cfg);
std::string serialize(const SweepSpec& spec);

// Throws config_error on invalid values (couplings < 0, tc <= 0,
// temperatures <= 0, p outside [0,1]).
void validate(const ModelConfig& cfg);
void validate(const SteadyCriterion& crit);
void validate(const SweepSpec& spec);

// Non-fatal advisories, e.g. a coupling with g*tc >= 1 (outside the
// short-collision regime the model is meant for).
std::vector<std::string> config_warnings(const ModelConfig& cfg);

}  // namespace cflux

#endif  // COLLISIONFLUX_CONFIG_HPP_
