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

#ifndef BELLSIM_EVENT_H
#define BELLSIM_EVENT_H

#include <cstdint>
#include <optional>

#include "bellsim/angle.h"
#include "bellsim/response.h"
#include "bellsim/settings.h"
#include "bellsim/source.h"

namespace bellsim {

/// The five independent uniforms consumed by one event, in stream order.
struct EventUniforms {
    double settings = 0;  // floor(4u) selects the pair index
    double xi = 0;
    double lambda = 0;
    double omega_a = 0;
    double omega_b = 0;
};

/// Which member of the antipodal λ pair was drawn. kContinuous for the
/// uniform source, where no exact conditioning on λ exists.
enum class LambdaBranch : std::uint8_t { kXi = 0, kOpposite = 1, kContinuous = 2 };

/// One simulated pair. `xi_slot` is set only for GammaMixture sources;
/// `xi` is empty for the uniform source.
struct EventRecord {
    SettingsPair pair;
    std::optional<XiSlot> xi_slot;
    std::optional<Angle> xi;
    Angle lambda;
    LambdaBranch branch = LambdaBranch::kContinuous;
    Outcome outcome_a = Outcome::kPlus;
    Outcome outcome_b = Outcome::kPlus;
};

/// Picks (φ_A, φ_B) with probability ¼ each from a single uniform. The two
/// index bits are independent fair coins.
SettingsPair choose_settings(const SettingsQuad &quad, double u);

/// Runs one event: settings, then ξ, then λ, then A from (φ_A, λ, ω_a) and B
/// from (φ_B, λ, ω_b). Throws ConfigError for an invalid source.
EventRecord generate_event(const SettingsQuad &quad, const SourcePolicy &source, const EventUniforms &u);

}  // namespace bellsim

#endif
