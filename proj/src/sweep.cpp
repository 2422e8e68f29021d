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

#include "collisionflux/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "collisionflux/engine.hpp"
#include "collisionflux/errors.hpp"
#include "collisionflux/log.hpp"

namespace cflux {

std::vector<double> axis_values(const AxisSpec& axis) {
  std::vector<double> values(static_cast<std::size_t>(axis.count));
  if (axis.count == 1) {
    values[0] = axis.min;
    return values;
  }
  const double step =
      (axis.max - axis.min) / static_cast<double>(axis.count - 1);
  for (std::int64_t k = 0; k < axis.count; ++k)
    values[static_cast<std::size_t>(k)] =
        axis.min + step * static_cast<double>(k);
  // Pin the endpoint exactly (no accumulated rounding at max).
  values.back() = axis.max;
  return values;
}

void apply_axis(ModelConfig& cfg, const std::string& name, double value) {
  if (name == "ga") cfg.ga = value;
  else if (name == "gb") cfg.gb = value;
  else if (name == "p") cfg.p = value;
  else if (name == "g12") cfg.g12 = value;
  else if (name == "g23") cfg.g23 = value;
  else if (name == "Th") cfg.Th = value;
  else if (name == "Tc") cfg.Tc = value;
  else
    throw config_error("apply_axis: '" + name +
                       "' is not a sweepable parameter");
}

SweepGrid run_sweep(const SweepSpec& spec, int workers) {
  validate(spec);

  SweepGrid grid;
  grid.axis1_values = axis_values(spec.axis1);
  grid.axis2_values = axis_values(spec.axis2);
  const std::size_t n1 = grid.axis1_values.size();
  const std::size_t n2 = grid.axis2_values.size();
  const std::size_t cells = n1 * n2;
  grid.j_ss.assign(cells, std::numeric_limits<double>::quiet_NaN());
  grid.converged.assign(cells, 0);
  grid.rounds.assign(cells, 0);
  grid.cell_errors.assign(cells, std::string());

  int pool = workers;
  if (pool <= 0) pool = static_cast<int>(std::thread::hardware_concurrency());
  if (pool < 1) pool = 1;
  if (static_cast<std::size_t>(pool) > cells)
    pool = static_cast<int>(cells);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t cell = next.fetch_add(1);
      if (cell >= cells) return;
      const std::size_t i = cell / n2;
      const std::size_t j = cell % n2;

      ModelConfig cfg = spec.base;
      apply_axis(cfg, spec.axis1.name, grid.axis1_values[i]);
      apply_axis(cfg, spec.axis2.name, grid.axis2_values[j]);
      try {
        // Record only the final round: sweeps need J_ss, not trajectories.
        const Trajectory t = run(cfg, spec.criterion, spec.criterion.max_rounds);
        grid.j_ss[cell] = t.j_ss;
        grid.converged[cell] = t.steady ? 1 : 0;
        grid.rounds[cell] = t.rounds;
      } catch (const std::exception& e) {
        // A pathological cell (numerical-integrity abort) must not take the
        // sweep down; the NaN + unconverged flag marks it in the output.
        grid.cell_errors[cell] = e.what();
        std::ostringstream msg;
        msg << "sweep cell (" << i << "," << j << ") aborted: " << e.what();
        log_error(msg.str());
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (log_level() >= LogLevel::kDebug) {
        std::ostringstream msg;
        msg << "sweep cell (" << i << "," << j << ") done [" << finished << "/"
            << cells << "]";
        log_debug(msg.str());
      }
    }
  };

  if (pool == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int k = 0; k < pool; ++k) threads.emplace_back(worker);
    for (std::thread& th : threads) th.join();
  }
  return grid;
}

}  // namespace cflux
