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

#ifndef COLLISIONFLUX_ERRORS_HPP_
#define COLLISIONFLUX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cflux {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent configuration (bad field value, unknown key,
// malformed JSON). Maps to process exit code 2.
class config_error : public error {
 public:
  explicit config_error(const std::string& msg) : error(msg) {}
};

// Filesystem problems (unreadable input, unwritable output). Maps to
// process exit code 3.
class io_error : public error {
 public:
  explicit io_error(const std::string& msg) : error(msg) {}
};

// Numerical-integrity violation: the evolving state left the validity
// envelope (Hermiticity, trace, positivity). Maps to process exit code 4.
class numeric_error : public error {
 public:
  explicit numeric_error(const std::string& msg) : error(msg) {}
};

}  // namespace cflux

#endif  // COLLISIONFLUX_ERRORS_HPP_
