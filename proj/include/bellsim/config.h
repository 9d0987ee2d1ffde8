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

#ifndef BELLSIM_CONFIG_H
#define BELLSIM_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bellsim/estimate.h"
#include "bellsim/settings.h"
#include "bellsim/simulation.h"
#include "bellsim/source.h"

namespace bellsim {

enum class SourceKind { kGammaMixture, kFixedXi, kUniform };

std::string_view source_kind_name(SourceKind kind);

/// A validated run description.
///
/// Exactly one of `theta` / explicit angles was given; `quad` is always the
/// resolved quadruple. All angles are in radians after parsing.
struct RunConfig {
    std::optional<double> theta;
    SettingsQuad quad;
    SourceKind source_kind = SourceKind::kGammaMixture;
    std::optional<double> gamma;
    std::optional<double> xi;
    std::uint64_t events = 0;
    std::uint64_t seed = 0;
    bool seed_from_env = false;
    std::size_t chunk_size = kDefaultChunkSize;
    AuditParams audit;

    SourcePolicy source() const;
};

/// Parses and validates a JSON config document. Unknown keys are rejected.
/// With `degrees`, theta/angles/xi are read as degrees and converted.
/// Throws ConfigError with a message naming the offending key.
RunConfig parse_config(std::string_view text, bool degrees = false);

/// Applies a BELLSIM_SEED value, if any. Throws ConfigError if it is not a
/// non-negative integer.
void apply_seed_override(RunConfig &config, std::optional<std::string_view> env_value);

}  // namespace bellsim

#endif
