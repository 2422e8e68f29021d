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

#ifndef COLLISIONFLUX_LOG_HPP_
#define COLLISIONFLUX_LOG_HPP_

#include <string>

namespace cflux {

// Log severity. The active level comes from the COLLISIONFLUX_LOG
// environment variable ("error", "info", "debug"); default is "info".
enum class LogLevel : int { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level();

// All output goes to stderr so that stdout stays clean for piping.
void log_error(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace cflux

#endif  // COLLISIONFLUX_LOG_HPP_
