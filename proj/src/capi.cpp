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

#include "collisionflux.h"

#include <chrono>
#include <cmath>
#include <string>

#include "collisionflux/config.hpp"
#include "collisionflux/engine.hpp"
#include "collisionflux/errors.hpp"
#include "collisionflux/spectrum.hpp"
#include "collisionflux/sweep.hpp"
#include "collisionflux/version.hpp"
#include "json.hpp"

namespace {

thread_local std::string g_last_error;

using ojson = nlohmann::ordered_json;

template <typename F>
cf_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return CF_OK;
  } catch (const cflux::config_error& e) {
    g_last_error = e.what();
    return CF_ERR_CONFIG;
  } catch (const cflux::io_error& e) {
    g_last_error = e.what();
    return CF_ERR_IO;
  } catch (const cflux::numeric_error& e) {
    g_last_error = e.what();
    return CF_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CF_ERR_INVALID;
  } catch (...) {
    g_last_error = "unknown error";
    return CF_ERR_INVALID;
  }
}

cf_status invalid(const char* msg) noexcept {
  try {
    g_last_error = msg;
  } catch (...) {
  }
  return CF_ERR_INVALID;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

ojson meta_common(const char* mode, double duration) {
  ojson meta;
  meta["tool"] = cflux::kToolName;
  meta["version"] = cflux::kVersion;
  meta["mode"] = mode;
  meta["duration_seconds"] = duration;
  return meta;
}

}  // namespace

struct cf_run {
  cflux::Trajectory traj;
  std::string manifest;
};

struct cf_sweep {
  cflux::SweepGrid grid;
  std::string manifest;
};

struct cf_spectrum {
  cflux::SpectrumReport report;
  std::string manifest;
};

extern "C" {

const char* cf_version(void) { return cflux::kVersion; }

const char* cf_last_error(void) { return g_last_error.c_str(); }

cf_status cf_run_execute(const char* config_json, int64_t stride,
                         cf_run** out) {
  if (config_json == nullptr || out == nullptr)
    return invalid("cf_run_execute: null argument");
  *out = nullptr;
  return guarded([&] {
    cflux::RunConfig cfg = cflux::parse_run_config(config_json);
    if (stride > 0) cfg.stride = stride;
    const auto t0 = std::chrono::steady_clock::now();
    cflux::Trajectory traj = cflux::run(cfg.model, cfg.criterion, cfg.stride);

    ojson manifest;
    manifest["config"] = ojson::parse(cflux::serialize(cfg));
    ojson meta = meta_common("run", seconds_since(t0));
    meta["converged"] = traj.steady;
    meta["rounds"] = traj.rounds;
    meta["j_ss"] = traj.j_ss;
    manifest["meta"] = meta;

    *out = new cf_run{std::move(traj), manifest.dump(2)};
  });
}

void cf_run_destroy(cf_run* run) { delete run; }

int64_t cf_run_record_count(const cf_run* run) {
  return run == nullptr ? 0 : static_cast<int64_t>(run->traj.records.size());
}

cf_status cf_run_record_at(const cf_run* run, int64_t i, cf_record* out) {
  if (run == nullptr || out == nullptr)
    return invalid("cf_run_record_at: null argument");
  if (i < 0 || i >= static_cast<int64_t>(run->traj.records.size()))
    return invalid("cf_run_record_at: index out of range");
  const cflux::CollisionRecord& r =
      run->traj.records[static_cast<std::size_t>(i)];
  out->n = r.n;
  out->dq_cold = r.dq_cold;
  out->dq_hot = r.dq_hot;
  out->dq_hse = r.dq_hse;
  out->j = r.j;
  out->e_register = r.e_register;
  return CF_OK;
}

int cf_run_converged(const cf_run* run) {
  return (run != nullptr && run->traj.steady) ? 1 : 0;
}

int64_t cf_run_rounds(const cf_run* run) {
  return run == nullptr ? 0 : run->traj.rounds;
}

double cf_run_jss(const cf_run* run) {
  return run == nullptr ? std::nan("") : run->traj.j_ss;
}

const char* cf_run_manifest_json(cf_run* run) {
  return run == nullptr ? "" : run->manifest.c_str();
}

cf_status cf_sweep_execute(const char* config_json, int32_t workers,
                           cf_sweep** out) {
  if (config_json == nullptr || out == nullptr)
    return invalid("cf_sweep_execute: null argument");
  *out = nullptr;
  return guarded([&] {
    const cflux::SweepSpec spec = cflux::parse_sweep_config(config_json);
    const auto t0 = std::chrono::steady_clock::now();
    cflux::SweepGrid grid = cflux::run_sweep(spec, workers);

    int64_t converged_cells = 0;
    for (std::uint8_t c : grid.converged) converged_cells += c;

    ojson manifest;
    manifest["config"] = ojson::parse(cflux::serialize(spec));
    ojson meta = meta_common("sweep", seconds_since(t0));
    meta["cells"] = static_cast<int64_t>(grid.j_ss.size());
    meta["converged_cells"] = converged_cells;
    manifest["meta"] = meta;

    *out = new cf_sweep{std::move(grid), manifest.dump(2)};
  });
}

void cf_sweep_destroy(cf_sweep* sweep) { delete sweep; }

int64_t cf_sweep_axis1_count(const cf_sweep* sweep) {
  return sweep == nullptr
             ? 0
             : static_cast<int64_t>(sweep->grid.axis1_values.size());
}

int64_t cf_sweep_axis2_count(const cf_sweep* sweep) {
  return sweep == nullptr
             ? 0
             : static_cast<int64_t>(sweep->grid.axis2_values.size());
}

cf_status cf_sweep_axis1_value(const cf_sweep* sweep, int64_t i, double* out) {
  if (sweep == nullptr || out == nullptr)
    return invalid("cf_sweep_axis1_value: null argument");
  if (i < 0 || i >= static_cast<int64_t>(sweep->grid.axis1_values.size()))
    return invalid("cf_sweep_axis1_value: index out of range");
  *out = sweep->grid.axis1_values[static_cast<std::size_t>(i)];
  return CF_OK;
}

cf_status cf_sweep_axis2_value(const cf_sweep* sweep, int64_t j, double* out) {
  if (sweep == nullptr || out == nullptr)
    return invalid("cf_sweep_axis2_value: null argument");
  if (j < 0 || j >= static_cast<int64_t>(sweep->grid.axis2_values.size()))
    return invalid("cf_sweep_axis2_value: index out of range");
  *out = sweep->grid.axis2_values[static_cast<std::size_t>(j)];
  return CF_OK;
}

cf_status cf_sweep_cell(const cf_sweep* sweep, int64_t i, int64_t j,
                        cf_cell* out) {
  if (sweep == nullptr || out == nullptr)
    return invalid("cf_sweep_cell: null argument");
  const int64_t n1 = static_cast<int64_t>(sweep->grid.axis1_values.size());
  const int64_t n2 = static_cast<int64_t>(sweep->grid.axis2_values.size());
  if (i < 0 || i >= n1 || j < 0 || j >= n2)
    return invalid("cf_sweep_cell: index out of range");
  const std::size_t cell = sweep->grid.index(static_cast<std::size_t>(i),
                                             static_cast<std::size_t>(j));
  out->j_ss = sweep->grid.j_ss[cell];
  out->converged = sweep->grid.converged[cell];
  out->rounds = sweep->grid.rounds[cell];
  return CF_OK;
}

const char* cf_sweep_manifest_json(cf_sweep* sweep) {
  return sweep == nullptr ? "" : sweep->manifest.c_str();
}

cf_status cf_spectrum_execute(const char* config_json, cf_spectrum** out) {
  if (config_json == nullptr || out == nullptr)
    return invalid("cf_spectrum_execute: null argument");
  *out = nullptr;
  return guarded([&] {
    const cflux::RunConfig cfg = cflux::parse_run_config(config_json);
    const auto t0 = std::chrono::steady_clock::now();
    cflux::SpectrumReport report = cflux::system_spectrum(cfg.model);

    ojson manifest;
    manifest["config"] = ojson::parse(cflux::serialize(cfg));
    manifest["meta"] = meta_common("spectrum", seconds_since(t0));

    *out = new cf_spectrum{std::move(report), manifest.dump(2)};
  });
}

void cf_spectrum_destroy(cf_spectrum* spectrum) { delete spectrum; }

int64_t cf_spectrum_count(const cf_spectrum* spectrum, int variant) {
  if (spectrum == nullptr) return 0;
  if (variant == CF_SPECTRUM_BARE)
    return static_cast<int64_t>(spectrum->report.eigenvalues_bare.size());
  if (variant == CF_SPECTRUM_COUPLED)
    return static_cast<int64_t>(spectrum->report.eigenvalues_coupled.size());
  return 0;
}

cf_status cf_spectrum_eigenvalue(const cf_spectrum* spectrum, int variant,
                                 int64_t i, double* out) {
  if (spectrum == nullptr || out == nullptr)
    return invalid("cf_spectrum_eigenvalue: null argument");
  const std::vector<double>* list = nullptr;
  if (variant == CF_SPECTRUM_BARE)
    list = &spectrum->report.eigenvalues_bare;
  else if (variant == CF_SPECTRUM_COUPLED)
    list = &spectrum->report.eigenvalues_coupled;
  else
    return invalid("cf_spectrum_eigenvalue: bad variant");
  if (i < 0 || i >= static_cast<int64_t>(list->size()))
    return invalid("cf_spectrum_eigenvalue: index out of range");
  *out = (*list)[static_cast<std::size_t>(i)];
  return CF_OK;
}

const char* cf_spectrum_manifest_json(cf_spectrum* spectrum) {
  return spectrum == nullptr ? "" : spectrum->manifest.c_str();
}

}  // extern "C"
