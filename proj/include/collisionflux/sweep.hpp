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

#ifndef COLLISIONFLUX_SWEEP_HPP_
#define COLLISIONFLUX_SWEEP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "collisionflux/config.hpp"

namespace cflux {

// Row-major grid of steady-state fluxes: cell (i, j) holds the run with
// axis1 = axis1_values[i], axis2 = axis2_values[j] substituted into the
// base config.
struct SweepGrid {
  std::vector<double> axis1_values;
  std::vector<double> axis2_values;
  std::vector<double> j_ss;           // size n1*n2; NaN for errored cells
  std::vector<std::uint8_t> converged;
  std::vector<std::int64_t> rounds;
  std::vector<std::string> cell_errors;  // empty string = cell ok

  std::size_t index(std::size_t i, std::size_t j) const {
    return i * axis2_values.size() + j;
  }
};

// The `count` evenly spaced axis points from min to max inclusive.
std::vector<double> axis_values(const AxisSpec& axis);

// Sets the named parameter on the config. Throws config_error for an
// unsupported name.
void apply_axis(ModelConfig& cfg, const std::string& name, double value);

// Evaluates every cell with a pool of `workers` threads (<= 0 means one
// per hardware thread). Cells are independent and deterministic: the
// result is identical for any worker count or scheduling order. A cell
// whose run aborts on a numerical-integrity error is recorded in that
// cell (J_ss = NaN, converged = 0, message in cell_errors) and never
// aborts the sweep.
SweepGrid run_sweep(const SweepSpec& spec, int workers);

}  // namespace cflux

#endif  // COLLISIONFLUX_SWEEP_HPP_
