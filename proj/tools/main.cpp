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

// Command-line front end. Links only the public C API (collisionflux.h);
// all model and engine logic lives behind the shared library boundary.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "collisionflux.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

void print_error(const std::string& msg) {
  std::fprintf(stderr, "collisionflux: error: %s\n", msg.c_str());
}

// Reports the library's last error and converts the status to an exit code
// (cf_status values are chosen to match the documented exit codes).
int report_failure(cf_status status) {
  print_error(cf_last_error());
  return static_cast<int>(status);
}

bool read_text_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return false;
  *out = buf.str();
  return true;
}

// Creates the output directory (if needed) and returns true on success.
bool prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return false;
  return std::filesystem::is_directory(dir, ec) && !ec;
}

bool write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  out.flush();
  return out.good();
}

// Full-precision formatting so CSV fixtures are stable and round-trippable.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(int64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%" PRId64, v);
  return buf;
}

int write_outputs_or_fail(const std::string& out_dir, const std::string& csv_name,
                          const std::string& csv, const std::string& manifest) {
  const std::filesystem::path base(out_dir);
  if (!write_text_file((base / csv_name).string(), csv)) {
    print_error("cannot write " + csv_name + " in '" + out_dir + "'");
    return kExitIo;
  }
  if (!write_text_file((base / "manifest.json").string(), manifest + "\n")) {
    print_error("cannot write manifest.json in '" + out_dir + "'");
    return kExitIo;
  }
  return 0;
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            int64_t stride) {
  std::string config_json;
  if (!read_text_file(config_path, &config_json)) {
    print_error("cannot read config file '" + config_path + "'");
    return kExitConfig;
  }
  if (!prepare_out_dir(out_dir)) {
    print_error("cannot create output directory '" + out_dir + "'");
    return kExitIo;
  }

  cf_run* run = nullptr;
  const cf_status status = cf_run_execute(config_json.c_str(), stride, &run);
  if (status != CF_OK) return report_failure(status);

  std::string csv = "n,dQ_cold,dQ_hot,J_n,E_register\n";
  const int64_t count = cf_run_record_count(run);
  for (int64_t i = 0; i < count; ++i) {
    cf_record rec;
    if (cf_run_record_at(run, i, &rec) != CF_OK) break;
    csv += fmt(rec.n) + "," + fmt(rec.dq_cold) + "," + fmt(rec.dq_hot) + "," +
           fmt(rec.j) + "," + fmt(rec.e_register) + "\n";
  }
  const std::string manifest = cf_run_manifest_json(run);
  cf_run_destroy(run);

  return write_outputs_or_fail(out_dir, "trajectory.csv", csv, manifest);
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              int32_t workers) {
  std::string config_json;
  if (!read_text_file(config_path, &config_json)) {
    print_error("cannot read config file '" + config_path + "'");
    return kExitConfig;
  }
  if (!prepare_out_dir(out_dir)) {
    print_error("cannot create output directory '" + out_dir + "'");
    return kExitIo;
  }

  cf_sweep* sweep = nullptr;
  const cf_status status = cf_sweep_execute(config_json.c_str(), workers, &sweep);
  if (status != CF_OK) return report_failure(status);

  std::string csv = "axis1,axis2,J_ss,converged,rounds\n";
  const int64_t n1 = cf_sweep_axis1_count(sweep);
  const int64_t n2 = cf_sweep_axis2_count(sweep);
  for (int64_t i = 0; i < n1; ++i) {
    double a1 = 0.0;
    cf_sweep_axis1_value(sweep, i, &a1);
    for (int64_t j = 0; j < n2; ++j) {
      double a2 = 0.0;
      cf_sweep_axis2_value(sweep, j, &a2);
      cf_cell cell;
      if (cf_sweep_cell(sweep, i, j, &cell) != CF_OK) continue;
      csv += fmt(a1) + "," + fmt(a2) + "," + fmt(cell.j_ss) + "," +
             fmt(static_cast<int64_t>(cell.converged)) + "," +
             fmt(cell.rounds) + "\n";
    }
  }
  const std::string manifest = cf_sweep_manifest_json(sweep);
  cf_sweep_destroy(sweep);

  return write_outputs_or_fail(out_dir, "grid.csv", csv, manifest);
}

int cmd_spectrum(const std::string& config_path, const std::string& out_dir) {
  std::string config_json;
  if (!read_text_file(config_path, &config_json)) {
    print_error("cannot read config file '" + config_path + "'");
    return kExitConfig;
  }
  if (!prepare_out_dir(out_dir)) {
    print_error("cannot create output directory '" + out_dir + "'");
    return kExitIo;
  }

  cf_spectrum* spectrum = nullptr;
  const cf_status status = cf_spectrum_execute(config_json.c_str(), &spectrum);
  if (status != CF_OK) return report_failure(status);

  std::string csv = "variant,index,eigenvalue\n";
  const struct {
    int variant;
    const char* name;
  } variants[] = {{CF_SPECTRUM_BARE, "bare"}, {CF_SPECTRUM_COUPLED, "coupled"}};
  for (const auto& v : variants) {
    const int64_t count = cf_spectrum_count(spectrum, v.variant);
    for (int64_t i = 0; i < count; ++i) {
      double ev = 0.0;
      if (cf_spectrum_eigenvalue(spectrum, v.variant, i, &ev) != CF_OK) continue;
      csv += std::string(v.name) + "," + fmt(i) + "," + fmt(ev) + "\n";
    }
  }
  const std::string manifest = cf_spectrum_manifest_json(spectrum);
  cf_spectrum_destroy(spectrum);

  return write_outputs_or_fail(out_dir, "spectrum.csv", csv, manifest);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "collisionflux — steady-state heat transport in a collisional "
      "three-qubit chain with a structured environment"};
  app.set_version_flag("--version", cf_version());
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int64_t stride = 0;   // 0: use the stride from the config file
  int32_t workers = 0;  // 0: use all available cores

  CLI::App* run = app.add_subcommand(
      "run", "Simulate one configuration and write trajectory.csv");
  run->add_option("config", config_path, "JSON config file")->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--stride", stride, "record every K-th round (overrides config)")
      ->check(CLI::PositiveNumber);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Map steady-state flux over a 2-D parameter grid (grid.csv)");
  sweep->add_option("config", config_path, "JSON sweep config file")->required();
  sweep->add_option("--out", out_dir, "output directory")->required();
  sweep
      ->add_option("--workers", workers,
                   "parallel worker cap; 0 = one per core (default)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Diagonalize the chain Hamiltonians and write spectrum.csv");
  spectrum->add_option("config", config_path, "JSON config file")->required();
  spectrum->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage diagnostic
    return kExitConfig;
  }

  if (run->parsed()) return cmd_run(config_path, out_dir, stride);
  if (sweep->parsed()) return cmd_sweep(config_path, out_dir, workers);
  return cmd_spectrum(config_path, out_dir);
}
