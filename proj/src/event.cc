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

#include "bellsim/event.h"

#include <algorithm>

namespace bellsim {

SettingsPair choose_settings(const SettingsQuad &quad, double u) {
    auto index = static_cast<std::size_t>(std::clamp(u * 4.0, 0.0, 3.0));
    return SettingsPair::from_index(quad, index);
}

EventRecord generate_event(const SettingsQuad &quad, const SourcePolicy &source, const EventUniforms &u) {
    validate(source);

    EventRecord rec;
    rec.pair = choose_settings(quad, u.settings);

    if (const auto *mix = std::get_if<GammaMixture>(&source)) {
        XiSlot slot = sample_xi(mix->scheme, mix->gamma, rec.pair, u.xi);
        rec.xi_slot = slot;
        rec.xi = angle_of(quad, slot);
    } else if (const auto *delta = std::get_if<DeltaPair>(&source)) {
        rec.xi = delta->xi;
    }

    if (rec.xi) {
        rec.lambda = sample_lambda(DeltaPair{*rec.xi}, u.lambda);
        rec.branch = u.lambda < 0.5 ? LambdaBranch::kXi : LambdaBranch::kOpposite;
    } else {
        rec.lambda = sample_lambda(UniformOnCircle{}, u.lambda);
        rec.branch = LambdaBranch::kContinuous;
    }

    rec.outcome_a = sample_outcome(response_prob_a(rec.pair.phi_a, rec.lambda, Outcome::kPlus), u.omega_a);
    rec.outcome_b = sample_outcome(response_prob_b(rec.pair.phi_b, rec.lambda, Outcome::kPlus), u.omega_b);
    return rec;
}

}  // namespace bellsim
