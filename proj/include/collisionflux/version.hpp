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

#ifndef COLLISIONFLUX_VERSION_HPP_
#define COLLISIONFLUX_VERSION_HPP_

namespace cflux {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "collisionflux";

}  // namespace cflux

#endif  // COLLISIONFLUX_VERSION_HPP_
