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

#include "collisionflux/config.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "collisionflux/errors.hpp"
#include "json.hpp"

namespace cflux {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
}

// A manifest written by this tool carries the original config under the
// "config" key; accept it transparently so outputs reproduce themselves.
json unwrap_manifest(json j) {
  if (j.is_object() && j.contains("config") && j.contains("meta"))
    return j["config"];
  return j;
}

void require_object(const json& j, const std::string& where) {
  if (!j.is_object())
    throw config_error(where + ": expected a JSON object");
}

double get_number(const json& j, const std::string& field,
                  const std::string& where) {
  const json& v = j.at(field);
  if (!v.is_number())
    throw config_error(where + ": field `" + field + "` must be a number");
  return v.get<double>();
}

std::int64_t get_integer(const json& j, const std::string& field,
                         const std::string& where) {
  const json& v = j.at(field);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw config_error(where + ": field `" + field + "` must be an integer");
  return v.get<std::int64_t>();
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& item : j.items())
    if (allowed.count(item.key()) == 0)
      throw config_error(where + ": unknown field `" + item.key() + "`");
}

const std::set<std::string> kModelFields = {"omega", "g12", "g23", "gh",
                                            "gc",    "ga",  "gb",  "tc",
                                            "Th",    "Tc",  "p"};

ModelConfig model_from_json(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, kModelFields, where);
  ModelConfig cfg;
  if (j.contains("omega")) cfg.omega = get_number(j, "omega", where);
  if (j.contains("g12")) cfg.g12 = get_number(j, "g12", where);
  if (j.contains("g23")) cfg.g23 = get_number(j, "g23", where);
  if (j.contains("gh")) cfg.gh = get_number(j, "gh", where);
  if (j.contains("gc")) cfg.gc = get_number(j, "gc", where);
  if (j.contains("ga")) cfg.ga = get_number(j, "ga", where);
  if (j.contains("gb")) cfg.gb = get_number(j, "gb", where);
  if (j.contains("tc")) cfg.tc = get_number(j, "tc", where);
  if (j.contains("Th")) cfg.Th = get_number(j, "Th", where);
  if (j.contains("Tc")) cfg.Tc = get_number(j, "Tc", where);
  if (j.contains("p")) cfg.p = get_number(j, "p", where);
  validate(cfg);
  return cfg;
}

SteadyCriterion criterion_from_json(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, {"rel_tol", "window", "max_rounds"}, where);
  SteadyCriterion crit;
  if (j.contains("rel_tol")) crit.rel_tol = get_number(j, "rel_tol", where);
  if (j.contains("window")) crit.window = get_integer(j, "window", where);
  if (j.contains("max_rounds"))
    crit.max_rounds = get_integer(j, "max_rounds", where);
  validate(crit);
  return crit;
}

AxisSpec axis_from_json(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, {"name", "min", "max", "count"}, where);
  for (const char* field : {"name", "min", "max", "count"})
    if (!j.contains(field))
      throw config_error(where + ": missing field `" + field + "`");
  AxisSpec axis;
  if (!j.at("name").is_string())
    throw config_error(where + ": field `name` must be a string");
  axis.name = j.at("name").get<std::string>();
  axis.min = get_number(j, "min", where);
  axis.max = get_number(j, "max", where);
  axis.count = get_integer(j, "count", where);
  return axis;
}

json model_to_json(const ModelConfig& cfg) {
  json j;
  j["omega"] = cfg.omega;
  j["g12"] = cfg.g12;
  j["g23"] = cfg.g23;
  j["gh"] = cfg.gh;
  j["gc"] = cfg.gc;
  j["ga"] = cfg.ga;
  j["gb"] = cfg.gb;
  j["tc"] = cfg.tc;
  j["Th"] = cfg.Th;
  j["Tc"] = cfg.Tc;
  j["p"] = cfg.p;
  return j;
}

json criterion_to_json(const SteadyCriterion& crit) {
  json j;
  j["rel_tol"] = crit.rel_tol;
  j["window"] = crit.window;
  j["max_rounds"] = crit.max_rounds;
  return j;
}

void check_nonnegative(double v, const char* field) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "field `" << field << "`: value " << v << " must be >= 0";
    throw config_error(msg.str());
  }
}

void check_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "field `" << field << "`: value " << v << " must be > 0";
    throw config_error(msg.str());
  }
}

const std::set<std::string> kAxisNames = {"ga", "gb", "p",  "g12",
                                          "g23", "Th", "Tc"};

void validate_axis(const AxisSpec& axis, const std::string& where) {
  if (kAxisNames.count(axis.name) == 0)
    throw config_error(where + ": field `name`: '" + axis.name +
                       "' is not a sweepable parameter (expected one of "
                       "ga, gb, p, g12, g23, Th, Tc)");
  if (axis.count < 1)
    throw config_error(where + ": field `count`: must be >= 1");
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max) ||
      axis.min > axis.max)
    throw config_error(where + ": field `min`: must satisfy min <= max");
  if (axis.count == 1 && axis.min != axis.max)
    throw config_error(where + ": a single-point axis requires min == max");
  if (axis.name == "p" && (axis.min < 0.0 || axis.max > 1.0))
    throw config_error(where + ": field `p`: bounds outside [0,1]");
  if ((axis.name == "Th" || axis.name == "Tc") && axis.min <= 0.0)
    throw config_error(where + ": field `" + axis.name +
                       "`: temperatures must be > 0");
  if ((axis.name == "ga" || axis.name == "gb" || axis.name == "g12" ||
       axis.name == "g23") &&
      axis.min < 0.0)
    throw config_error(where + ": field `" + axis.name +
                       "`: couplings must be >= 0");
}

}  // namespace

void validate(const ModelConfig& cfg) {
  check_positive(cfg.omega, "omega");
  check_nonnegative(cfg.g12, "g12");
  check_nonnegative(cfg.g23, "g23");
  check_nonnegative(cfg.gh, "gh");
  check_nonnegative(cfg.gc, "gc");
  check_nonnegative(cfg.ga, "ga");
  check_nonnegative(cfg.gb, "gb");
  check_positive(cfg.tc, "tc");
  check_positive(cfg.Th, "Th");
  check_positive(cfg.Tc, "Tc");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) {
    std::ostringstream msg;
    msg << "field `p`: value " << cfg.p << " outside [0,1]";
    throw config_error(msg.str());
  }
}

void validate(const SteadyCriterion& crit) {
  if (!(crit.rel_tol > 0.0) || !std::isfinite(crit.rel_tol))
    throw config_error("field `rel_tol`: must be > 0");
  if (crit.window < 2) throw config_error("field `window`: must be >= 2");
  if (crit.max_rounds < 1)
    throw config_error("field `max_rounds`: must be >= 1");
}

void validate(const SweepSpec& spec) {
  validate(spec.base);
  validate(spec.criterion);
  validate_axis(spec.axis1, "axis1");
  validate_axis(spec.axis2, "axis2");
  if (spec.axis1.name == spec.axis2.name)
    throw config_error("axis1 and axis2 must sweep different parameters");
}

std::vector<std::string> config_warnings(const ModelConfig& cfg) {
  std::vector<std::string> warnings;
  const std::pair<const char*, double> couplings[] = {
      {"g12", cfg.g12}, {"g23", cfg.g23}, {"gh", cfg.gh},
      {"gc", cfg.gc},   {"ga", cfg.ga},   {"gb", cfg.gb}};
  for (const auto& [name, g] : couplings) {
    if (g * cfg.tc >= 1.0) {
      std::ostringstream msg;
      msg << "coupling " << name << ": g*tc = " << g * cfg.tc
          << " >= 1, outside the short-collision regime the model assumes";
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

RunConfig parse_run_config(const std::string& json_text) {
  json j = unwrap_manifest(parse_text(json_text));
  require_object(j, "config");

  std::set<std::string> allowed = kModelFields;
  allowed.insert("criterion");
  allowed.insert("stride");
  reject_unknown(j, allowed, "config");

  RunConfig cfg;
  json model = j;
  model.erase("criterion");
  model.erase("stride");
  cfg.model = model_from_json(model, "config");
  if (j.contains("criterion"))
    cfg.criterion = criterion_from_json(j["criterion"], "criterion");
  if (j.contains("stride")) {
    cfg.stride = get_integer(j, "stride", "config");
    if (cfg.stride < 1) throw config_error("field `stride`: must be >= 1");
  }
  return cfg;
}

SweepSpec parse_sweep_config(const std::string& json_text) {
  json j = unwrap_manifest(parse_text(json_text));
  require_object(j, "config");
  reject_unknown(j, {"base", "axis1", "axis2", "criterion"}, "config");
  for (const char* field : {"base", "axis1", "axis2"})
    if (!j.contains(field))
      throw config_error(std::string("config: missing field `") + field + "`");

  SweepSpec spec;
  spec.base = model_from_json(j["base"], "base");
  spec.axis1 = axis_from_json(j["axis1"], "axis1");
  spec.axis2 = axis_from_json(j["axis2"], "axis2");
  if (j.contains("criterion"))
    spec.criterion = criterion_from_json(j["criterion"], "criterion");
  validate(spec);
  return spec;
}

std::string serialize(const RunConfig& cfg) {
  json j = model_to_json(cfg.model);
  j["criterion"] = criterion_to_json(cfg.criterion);
  j["stride"] = cfg.stride;
  return j.dump(2);
}

std::string serialize(const SweepSpec& spec) {
  json j;
  j["base"] = model_to_json(spec.base);
  json a1;
  a1["name"] = spec.axis1.name;
  a1["min"] = spec.axis1.min;
  a1["max"] = spec.axis1.max;
  a1["count"] = spec.axis1.count;
  j["axis1"] = a1;
  json a2;
  a2["name"] = spec.axis2.name;
  a2["min"] = spec.axis2.min;
  a2["max"] = spec.axis2.max;
  a2["count"] = spec.axis2.count;
  j["axis2"] = a2;
  j["criterion"] = criterion_to_json(spec.criterion);
  return j.dump(2);
}

}  // namespace cflux
