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

#ifndef BELLSIM_SETTINGS_H
#define BELLSIM_SETTINGS_H

#include <array>
#include <cstdint>
#include <string_view>

#include "bellsim/angle.h"

namespace bellsim {

/// The four CHSH analyzer orientations. Repeated angles are allowed.
struct SettingsQuad {
    Angle a;
    Angle a_prime;
    Angle b;
    Angle b_prime;

    /// The family a=2θ, a′=0, b=θ, b′=3θ, which reaches 2√2 at θ=5π/4.
    static SettingsQuad from_theta(double theta) {
        return {Angle(2.0 * theta), Angle(0.0), Angle(theta), Angle(3.0 * theta)};
    }

    friend bool operator==(const SettingsQuad &, const SettingsQuad &) = default;
};

/// Identifies one of the quad's four entries; also the ξ label of a mixture event.
enum class XiSlot : std::uint8_t { kA = 0, kAPrime = 1, kB = 2, kBPrime = 3 };

inline constexpr std::array<XiSlot, 4> kAllXiSlots = {XiSlot::kA, XiSlot::kAPrime, XiSlot::kB, XiSlot::kBPrime};

inline Angle angle_of(const SettingsQuad &quad, XiSlot slot) {
    switch (slot) {
        case XiSlot::kA:
            return quad.a;
        case XiSlot::kAPrime:
            return quad.a_prime;
        case XiSlot::kB:
            return quad.b;
        case XiSlot::kBPrime:
            return quad.b_prime;
    }
    return quad.a;
}

std::string_view slot_name(XiSlot slot);

/// The settings chosen for one event. Index 0 selects a (resp. b), 1 selects
/// a′ (resp. b′).
struct SettingsPair {
    Angle phi_a;
    Angle phi_b;
    std::uint8_t index_a = 0;
    std::uint8_t index_b = 0;

    static SettingsPair select(const SettingsQuad &quad, std::uint8_t index_a, std::uint8_t index_b) {
        return {index_a ? quad.a_prime : quad.a, index_b ? quad.b_prime : quad.b, index_a, index_b};
    }

    /// Inverse of `index()`: 0 (a,b), 1 (a,b′), 2 (a′,b), 3 (a′,b′).
    static SettingsPair from_index(const SettingsQuad &quad, std::size_t pair_index) {
        return select(quad, static_cast<std::uint8_t>(pair_index >> 1), static_cast<std::uint8_t>(pair_index & 1));
    }

    std::size_t index() const {
        return (std::size_t{index_a} << 1) | index_b;
    }

    XiSlot chosen_a_slot() const {
        return index_a ? XiSlot::kAPrime : XiSlot::kA;
    }
    XiSlot chosen_b_slot() const {
        return index_b ? XiSlot::kBPrime : XiSlot::kB;
    }
    XiSlot unchosen_a_slot() const {
        return index_a ? XiSlot::kA : XiSlot::kAPrime;
    }
    XiSlot unchosen_b_slot() const {
        return index_b ? XiSlot::kB : XiSlot::kBPrime;
    }

    friend bool operator==(const SettingsPair &, const SettingsPair &) = default;
};

inline constexpr std::size_t kNumPairs = 4;

/// "(a,b)", "(a,b')", "(a',b)" or "(a',b')".
std::string_view pair_name(std::size_t pair_index);

}  // namespace bellsim

#endif
