// Copyright 2026 The Bellsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLSIM_ERRORS_H
#define BELLSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace bellsim {

/// Invalid model or run configuration (bad weights, out-of-range Γ, malformed
/// config document). Surfaces at the CLI as exit code 1.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string &msg) : std::invalid_argument(msg) {
    }
};

/// Not enough simulated events to form an estimate. Surfaces as exit code 2.
struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string &msg) : std::runtime_error(msg) {
    }
};

}  // namespace bellsim

#endif
